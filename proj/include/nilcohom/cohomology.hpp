#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nilcohom/differential.hpp"
#include "nilcohom/form.hpp"
#include "nilcohom/linalg.hpp"

namespace nilcohom {

// Exterior algebras scale as 2^n; past this cap exact elimination stops
// being a sane default, so the factories refuse to proceed.
inline constexpr int kDimensionCap = 16;

/// Degree slot: de Rham tables use (k, 0), Dolbeault tables use (p, q).
using Grade = std::pair<int, int>;

inline Grade operator+(Grade a, Grade b) { return {a.first + b.first, a.second + b.second}; }
inline Grade operator-(Grade a, Grade b) { return {a.first - b.first, a.second - b.second}; }
inline int total_degree(Grade g) { return g.first + g.second; }

/// Raw finite cochain complex: dims[k] spaces and matrices D[k] of shape
/// dims[k+1] x dims[k].
struct CochainComplex {
    std::vector<int> dims;
    std::vector<Matrix> D;
};

struct PlainCohomology {
    std::vector<int> dims;
    std::vector<std::vector<Vec>> representatives;  // coordinates per degree
};

/// Exact cohomology of a raw complex. Validates D_{k+1} D_k = 0 and throws
/// NotAComplex{degree} otherwise. Representatives are reduced-echelon kernel
/// vectors reduced modulo an echelon basis of the image.
PlainCohomology complex_cohomology(const CochainComplex& cx);

/// Matrix of D restricted to a graded slice: columns indexed by from_basis,
/// rows by to_basis. Any image term outside to_basis is an internal error.
Matrix operator_matrix(const Differential& D, const std::vector<Mono>& from_basis,
                       const std::vector<Mono>& to_basis, int n, BasisKind kind);

enum class DgaKind { DeRham, Dolbeault, ZeroStar };

struct CohomologyClass {
    Grade grade{0, 0};
    Form rep;
    Vec coords;         // coordinates in the chosen basis of H^grade
    int class_id = -1;  // basis index when the class is a basis vector
    long table_id = -1;

    CohomologyClass() : rep(1, BasisKind::Real) {}
    bool is_zero() const { return is_zero_vec(coords); }
};

/// Cohomology of a graded complex with its chosen representatives, class
/// coordinate solver and cup products. Deterministic throughout: monomial
/// bases are enumerated in a fixed order and all elimination pivots
/// lexicographically.
class GradedCohomology {
public:
    static GradedCohomology derham(const LieAlgebra& g);
    static GradedCohomology dolbeault(const LieAlgebra& g, const ComplexStructure& cs);
    static GradedCohomology zero_star(const LieAlgebra& g, const ComplexStructure& cs);

    DgaKind dga_kind() const { return dga_kind_; }
    long id() const { return id_; }
    Grade shift() const { return shift_; }
    BasisKind basis_kind() const { return basis_kind_; }
    int n() const { return n_; }
    int m() const { return n_ / 2; }
    Grade top_grade() const { return top_; }

    /// Grades with a slice, in deterministic scan order.
    const std::vector<Grade>& grades() const { return grade_order_; }
    bool has(Grade g) const { return slices_.count(g) > 0; }

    int dim(Grade g) const;  // 0 for absent grades
    const std::vector<Form>& representatives(Grade g) const;

    CohomologyClass basis_class(Grade g, int idx) const;

    /// Class of a closed form (throws std::logic_error when not closed).
    CohomologyClass class_of(const Form& f, Grade g) const;

    bool is_closed(Grade g, const Form& f) const;

    /// Wedge on representatives, then the class of the result; the product
    /// of closed representatives is representative-independent.
    CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b) const;

    /// Solves D x = f with f in slice `target`; nullopt when f is not exact.
    std::optional<Form> primitive(Grade target, const Form& f) const;

    const Differential& differential() const { return *diff_; }

    /// Coordinates of a form in the monomial basis of a slice.
    Vec slice_coords(Grade g, const Form& f) const;
    Form slice_form(Grade g, const Vec& coords) const;
    const std::vector<Mono>& slice_basis(Grade g) const;

private:
    struct Slice {
        std::vector<Mono> basis;
        std::map<Mono, int, MonoLess> index;
        Matrix D_out;               // to grade + shift
        RowSpan image{0};           // echelon basis of the image from below
        std::vector<Vec> rep_coords;
        std::vector<Form> reps;
        Matrix coord_matrix;        // columns [image basis | representatives]
        int h = 0;
    };

    GradedCohomology(DgaKind kind, BasisKind basis_kind, int n, Grade shift, Grade top,
                     std::vector<Grade> order, Differential diff);

    const Slice& slice(Grade g) const;
    void build();

    DgaKind dga_kind_;
    BasisKind basis_kind_;
    int n_;
    Grade shift_;
    Grade top_;
    std::vector<Grade> grade_order_;
    std::optional<Differential> diff_;
    std::map<Grade, Slice> slices_;
    long id_;
};

/// Betti numbers b_0..b_n of the Chevalley-Eilenberg complex.
std::vector<int> betti_numbers(const LieAlgebra& g);

/// Hodge numbers h^{p,q} as an (m+1) x (m+1) table, p rows, q columns.
/// Row p is the cohomology of (Lambda^{p,*}, delbar); row 0 is the
/// (0,*)-Dolbeault algebra.
std::vector<std::vector<int>> hodge_numbers(const LieAlgebra& g,
                                            const ComplexStructure& cs);

struct PairingReport {
    int p = 0, q = 0;
    Matrix matrix;  // H^{p,q} x H^{top-(p,q)} -> H^top coordinates
    bool nondegenerate = false;
    int top_dim = 0;
};

/// Cup-product pairing into the one-dimensional top cohomology. Works for
/// both the full Dolbeault table (top (m,m)) and the (0,*) row (top (0,m)).
/// Throws TopNotOneDimensional when dim H^top != 1.
PairingReport poincare_pairing(const GradedCohomology& table, int p, int q);

struct DdbarReport {
    int m = 0;
    std::vector<std::vector<bool>> holds;  // (m+1) x (m+1), [p][q]
    bool overall = true;
    struct Witness {
        int p = 0, q = 0;
        std::string form;
        std::string condition;
    };
    std::optional<Witness> witness;  // first failure in scan order
};

/// Finite-dimensional del-delbar lemma test: in every bidegree,
/// im(delbar) ∩ ker(del) and im(del) ∩ ker(delbar) must lie in im(del delbar).
DdbarReport check_ddbar_lemma(const LieAlgebra& g, const ComplexStructure& cs);

}  // namespace nilcohom
