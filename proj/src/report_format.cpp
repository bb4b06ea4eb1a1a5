#include <sstream>

#include "nilcohom/report.hpp"

namespace nilcohom {

std::string format_mono(Mono s, BasisKind kind, int n) {
    if (s == 0) return "1";
    std::ostringstream os;
    if (kind == BasisKind::Real) {
        std::vector<int> idx;
        for (Mono t = s; t; t &= t - 1) idx.push_back(std::countr_zero(t) + 1);
        bool wide = idx.back() > 9;
        if (wide) {
            os << "e(";
            for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
            os << ")";
        } else {
            os << "e";
            for (int i : idx) os << i;
        }
        return os.str();
    }
    int m = n / 2;
    Mono low = s & ((Mono(1) << m) - 1);
    Mono high = s >> m;
    if (low) {
        os << "w";
        for (Mono t = low; t; t &= t - 1) os << std::countr_zero(t) + 1;
    }
    if (high) {
        if (low) os << "^";
        os << "W";
        for (Mono t = high; t; t &= t - 1) os << std::countr_zero(t) + 1;
    }
    return os.str();
}

std::string format_form(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : f.terms()) {
        if (!first) os << " + ";
        os << format_scalar(c);
        if (s != 0) os << " " << format_mono(s, f.kind(), f.n());
        first = false;
    }
    return os.str();
}

}  // namespace nilcohom
