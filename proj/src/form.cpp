#include "nilcohom/form.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilcohom {

Form Form::monomial(int n, BasisKind kind, Mono s, GaussianRational coeff) {
    Form f(n, kind);
    f.set(s, std::move(coeff));
    return f;
}

Form Form::generator(int n, BasisKind kind, int idx0) {
    return monomial(n, kind, Mono(1) << idx0, GaussianRational(1));
}

std::optional<int> Form::degree() const {
    std::optional<int> deg;
    for (const auto& [s, c] : terms_) {
        (void)c;
        int d = mono_degree(s);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

std::pair<int, int> Form::bidegree_of(Mono s) const {
    int m = n_ / 2;
    Mono unbarred = s & ((Mono(1) << m) - 1);
    return {std::popcount(unbarred), std::popcount(s >> m)};
}

void Form::set(Mono s, GaussianRational coeff) {
    if (coeff.is_zero())
        terms_.erase(s);
    else
        terms_[s] = std::move(coeff);
}

Form Form::operator-() const {
    Form f(n_, kind_);
    for (const auto& [s, c] : terms_) f.terms_.emplace(s, -c);
    return f;
}

Form& Form::operator+=(const Form& o) {
    if (n_ != o.n_ || kind_ != o.kind_)
        throw BasisMismatch("form addition across different bases");
    for (const auto& [s, c] : o.terms_) {
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(s, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_) {
        (void)s;
        v *= c;
    }
    return *this;
}

Form Form::conj() const {
    Form f(n_, kind_);
    if (kind_ == BasisKind::Real) {
        for (const auto& [s, c] : terms_) f.terms_.emplace(s, c.conj());
        return f;
    }
    int m = n_ / 2;
    Mono low = (Mono(1) << m) - 1;
    for (const auto& [s, c] : terms_) {
        auto [p, q] = bidegree_of(s);
        Mono swapped = ((s & low) << m) | (s >> m);
        int sign = (p * q) & 1 ? -1 : 1;  // move q unbarred past p barred
        f.set(swapped, sign < 0 ? -c.conj() : c.conj());
    }
    return f;
}

Form wedge(const Form& a, const Form& b) {
    if (a.n() != b.n() || a.kind() != b.kind())
        throw BasisMismatch("wedge of forms over different bases");
    Form out(a.n(), a.kind());
    for (const auto& [s, cs] : a.terms())
        for (const auto& [t, ct] : b.terms()) {
            if (s & t) continue;  // repeated covector
            GaussianRational coeff = cs * ct;
            if (merge_sign(s, t) < 0) coeff = -coeff;
            auto it = out.terms().find(s | t);
            GaussianRational acc = it == out.terms().end() ? coeff : it->second + coeff;
            out.set(s | t, std::move(acc));
        }
    return out;
}

Form bidegree_project(const Form& f, int p, int q) {
    if (f.kind() != BasisKind::Bigraded)
        throw WrongBasis("bidegree projection needs the bigraded basis");
    Form out(f.n(), BasisKind::Bigraded);
    for (const auto& [s, c] : f.terms())
        if (f.bidegree_of(s) == std::pair<int, int>{p, q}) out.set(s, c);
    return out;
}

Form substitute(const Form& f, const std::vector<Form>& images, int target_n,
                BasisKind target_kind) {
    Form out(target_n, target_kind);
    for (const auto& [s, c] : f.terms()) {
        Form prod = Form::monomial(target_n, target_kind, 0, GaussianRational(1));
        for (Mono t = s; t; t &= t - 1) prod = wedge(prod, images[std::countr_zero(t)]);
        out += c * prod;
    }
    return out;
}

GaussianRational evaluate(const Form& f, const std::vector<Vec>& vectors,
                          const Matrix& covector_rows) {
    int k = int(vectors.size());
    GaussianRational total;
    for (const auto& [s, c] : f.terms()) {
        if (mono_degree(s) != k)
            throw std::logic_error("evaluate: form degree does not match argument count");
        // det of pairings <generator_r, vector_c>
        std::vector<int> gens;
        for (Mono t = s; t; t &= t - 1) gens.push_back(std::countr_zero(t));
        Matrix mat(k, k);
        for (int r = 0; r < k; ++r)
            for (int col = 0; col < k; ++col) {
                GaussianRational acc;
                for (int x = 0; x < covector_rows.cols(); ++x)
                    acc += covector_rows.at(gens[r], x) * vectors[col][x];
                mat.at(r, col) = acc;
            }
        // exact determinant by elimination
        GaussianRational det(1);
        for (int col = 0; col < k; ++col) {
            int pivot = -1;
            for (int r = col; r < k; ++r)
                if (!mat.at(r, col).is_zero()) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) {
                det = GaussianRational(0);
                break;
            }
            if (pivot != col) {
                for (int cc = 0; cc < k; ++cc) std::swap(mat.at(pivot, cc), mat.at(col, cc));
                det = -det;
            }
            det *= mat.at(col, col);
            GaussianRational inv = mat.at(col, col).inv();
            for (int r = col + 1; r < k; ++r) {
                GaussianRational fac = mat.at(r, col) * inv;
                if (fac.is_zero()) continue;
                for (int cc = col; cc < k; ++cc) mat.at(r, cc) -= fac * mat.at(col, cc);
            }
        }
        total += c * det;
    }
    return total;
}

std::vector<Mono> monomials_of_degree(int gens, int k) {
    std::vector<Mono> out;
    if (k < 0 || k > gens) return out;
    // first k-subset in lex order
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mono s = 0;
        for (int i : idx) s |= Mono(1) << i;
        out.push_back(s);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == gens - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<Mono> monomials_of_bidegree(int m, int p, int q) {
    std::vector<Mono> out;
    if (p < 0 || q < 0 || p > m || q > m) return out;
    std::vector<Mono> all = monomials_of_degree(2 * m, p + q);
    Mono low = (Mono(1) << m) - 1;
    for (Mono s : all)
        if (std::popcount(s & low) == p) out.push_back(s);
    return out;
}

}  // namespace nilcohom
