#include "nilcohom/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace nilcohom {

namespace {

std::string describe_violations(const std::vector<JacobiTriple>& triples) {
    std::ostringstream os;
    os << "Jacobi identity violated for " << triples.size() << " triple(s):";
    for (const auto& t : triples) {
        os << " (" << t.i << "," << t.j << "," << t.k << ") residual";
        for (size_t c = 0; c < t.residual.size(); ++c) {
            if (t.residual[c].is_zero()) continue;
            os << " " << format_scalar(t.residual[c]) << "*e" << c + 1;
        }
        os << ";";
    }
    return os.str();
}

void check_indices(int dim, const StructureConstants& constants) {
    for (const auto& [key, value] : constants) {
        auto [i, j] = key;
        if (i == j)
            throw ValidationError("bracket [e_i, e_i] must not be stored", "brackets");
        if (i < 1 || j < 1 || i > dim || j > dim || i >= j)
            throw IndexOutOfRange("bracket index pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") out of range for dim " +
                                  std::to_string(dim) + " (need 1 <= i < j <= dim)");
        for (const auto& [k, coeff] : value) {
            (void)coeff;
            if (k < 1 || k > dim)
                throw IndexOutOfRange("bracket target index " + std::to_string(k) +
                                      " out of range for dim " + std::to_string(dim));
        }
    }
}

StructureConstants prune_zeros(StructureConstants constants) {
    for (auto it = constants.begin(); it != constants.end();) {
        for (auto jt = it->second.begin(); jt != it->second.end();)
            jt = jt->second.is_zero() ? it->second.erase(jt) : std::next(jt);
        it = it->second.empty() ? constants.erase(it) : std::next(it);
    }
    return constants;
}

}  // namespace

JacobiViolation::JacobiViolation(std::vector<JacobiTriple> t)
    : Error(describe_violations(t)), triples(std::move(t)) {}

Vec LieAlgebra::bracket_basis(int x, int y) const {
    Vec v(dim_);
    if (x == y) return v;
    bool flip = x > y;
    if (flip) std::swap(x, y);
    auto it = constants_.find({x, y});
    if (it == constants_.end()) return v;
    for (const auto& [k, coeff] : it->second) v[k - 1] = flip ? -coeff : coeff;
    return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec v(dim_);
    for (const auto& [key, value] : constants_) {
        auto [i, j] = key;
        GaussianRational f = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
        if (f.is_zero()) continue;
        for (const auto& [k, coeff] : value) v[k - 1] += f * coeff;
    }
    return v;
}

bool LieAlgebra::is_real() const {
    for (const auto& [key, value] : constants_) {
        (void)key;
        for (const auto& [k, coeff] : value) {
            (void)k;
            if (!coeff.is_real()) return false;
        }
    }
    return true;
}

std::vector<JacobiTriple> jacobi_violations(int dim, const StructureConstants& constants) {
    check_indices(dim, constants);
    LieAlgebra g = LieAlgebra::trusted(dim, prune_zeros(constants));

    std::vector<JacobiTriple> violations;
    for (int i = 1; i <= dim; ++i)
        for (int j = i + 1; j <= dim; ++j)
            for (int k = j + 1; k <= dim; ++k) {
                Vec ei(dim), ej(dim), ek(dim);
                ei[i - 1] = 1;
                ej[j - 1] = 1;
                ek[k - 1] = 1;
                Vec r = g.bracket(g.bracket_basis(i, j), ek);
                Vec s = g.bracket(g.bracket_basis(j, k), ei);
                Vec t = g.bracket(g.bracket_basis(k, i), ej);
                Vec residual(dim);
                bool nonzero = false;
                for (int c = 0; c < dim; ++c) {
                    residual[c] = r[c] + s[c] + t[c];
                    nonzero |= !residual[c].is_zero();
                }
                if (nonzero) violations.push_back({i, j, k, std::move(residual)});
            }
    return violations;
}

LieAlgebra LieAlgebra::validate(int dim, const StructureConstants& constants,
                                std::vector<std::string> labels) {
    if (dim < 1) throw ValidationError("dimension must be >= 1", "dim");
    auto violations = jacobi_violations(dim, constants);
    if (!violations.empty()) throw JacobiViolation(std::move(violations));
    return trusted(dim, constants, std::move(labels));
}

LieAlgebra LieAlgebra::trusted(int dim, StructureConstants constants,
                               std::vector<std::string> labels) {
    if (dim < 1) throw ValidationError("dimension must be >= 1", "dim");
    if (dim > 62)
        throw ValidationError("dimension exceeds 62, the bitmask multi-index bound", "dim");
    if (labels.empty()) {
        labels.reserve(dim);
        for (int i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
    }
    return LieAlgebra(dim, prune_zeros(std::move(constants)), std::move(labels));
}

LowerCentralSeries lower_central_series(const LieAlgebra& g) {
    int n = g.dim();
    LowerCentralSeries out;
    out.dims.push_back(n);

    // current term of the series as an echelon row span
    RowSpan current(n);
    for (int i = 1; i <= n; ++i) {
        Vec e(n);
        e[i - 1] = 1;
        current.add(e);
    }

    while (current.dim() > 0) {
        RowSpan next(n);
        for (int i = 1; i <= n; ++i) {
            Vec ei(n);
            ei[i - 1] = 1;
            for (const Vec& v : current.rows()) next.add(g.bracket(ei, v));
        }
        if (next.dim() == current.dim()) throw NotNilpotent(current.dim());
        out.dims.push_back(next.dim());
        current = std::move(next);
    }
    out.nilpotency_class = int(out.dims.size()) - 1;
    return out;
}

}  // namespace nilcohom
