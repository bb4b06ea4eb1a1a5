#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nilcohom/linalg.hpp"
#include "nilcohom/scalar.hpp"

namespace nilcohom {

/// Multi-index of an exterior monomial as a bitmask over the generators
/// (up to 62 of them; algebra construction enforces the bound). Real basis:
/// bit t is e^{t+1}. Bigraded basis with m = n/2: bits 0..m-1 are
/// omega^1..omega^m, bits m..2m-1 are the conjugates. The (p,q) bidegree is
/// a popcount per half.
using Mono = std::uint64_t;

enum class BasisKind { Real, Bigraded };

inline int mono_degree(Mono s) { return std::popcount(s); }

/// Sign of merging two disjoint sorted multi-indices, (-1)^inversions.
inline int merge_sign(Mono a, Mono b) {
    int inv = 0;
    for (Mono t = b; t; t &= t - 1) {
        int j = std::countr_zero(t);
        inv += std::popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

/// Total order on multi-indices: by degree, then lexicographic on the
/// increasing index sequences. Fixes pivot order everywhere downstream.
struct MonoLess {
    bool operator()(Mono a, Mono b) const {
        int da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db;
        while (a && b) {
            int la = std::countr_zero(a), lb = std::countr_zero(b);
            if (la != lb) return la < lb;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    }
};

/// Sparse element of the complexified exterior algebra. Zero coefficients
/// are never stored. Immutable value semantics.
class Form {
public:
    using TermMap = std::map<Mono, GaussianRational, MonoLess>;

    Form(int n, BasisKind kind) : n_(n), kind_(kind) {}

    static Form monomial(int n, BasisKind kind, Mono s, GaussianRational coeff);
    /// Single generator, idx0 in 0..n-1 (bigraded: 0..m-1 unbarred, m.. barred).
    static Form generator(int n, BasisKind kind, int idx0);

    int n() const { return n_; }
    BasisKind kind() const { return kind_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Degree of a homogeneous form; nullopt for 0 or mixed-degree forms.
    std::optional<int> degree() const;

    /// (p, q) of a bigraded monomial of this form's algebra.
    std::pair<int, int> bidegree_of(Mono s) const;

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    Form& operator*=(const GaussianRational& c);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const GaussianRational& c, Form f) { return f *= c; }

    friend bool operator==(const Form& a, const Form& b) {
        return a.n_ == b.n_ && a.kind_ == b.kind_ && a.terms_ == b.terms_;
    }

    /// Complex conjugate. In the bigraded basis this also swaps barred and
    /// unbarred generators (with the reordering sign).
    Form conj() const;

    void set(Mono s, GaussianRational coeff);  // drops exact zeros

private:
    int n_;
    BasisKind kind_;
    TermMap terms_;
};

/// Exterior product; repeated indices drop out, signs come from sorting the
/// concatenated multi-index. Throws BasisMismatch on ambient disagreement.
Form wedge(const Form& a, const Form& b);

/// Terms with exactly p unbarred and q barred indices. Throws WrongBasis on
/// real-basis input.
Form bidegree_project(const Form& f, int p, int q);

/// Ring homomorphism determined by generator |-> images[generator]; each
/// image must be a 1-form (or zero) in the target algebra.
Form substitute(const Form& f, const std::vector<Form>& images, int target_n,
                BasisKind target_kind);

/// Value of a homogeneous k-form on k vectors. `covector_rows` holds the
/// e-coordinates of each generator covector (identity for the real basis).
GaussianRational evaluate(const Form& f, const std::vector<Vec>& vectors,
                          const Matrix& covector_rows);

/// All degree-k multi-indices over `gens` generators, in MonoLess order.
std::vector<Mono> monomials_of_degree(int gens, int k);

/// All (p,q) multi-indices for complex dimension m, in MonoLess order.
std::vector<Mono> monomials_of_bidegree(int m, int p, int q);

}  // namespace nilcohom
