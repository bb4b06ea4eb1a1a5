#pragma once

#include <vector>

#include "nilcohom/lie_algebra.hpp"
#include "nilcohom/linalg.hpp"

namespace nilcohom {

/// Invariant complex structure given as an endomorphism J with J^2 = -id.
/// Stores the derived bases: g^{1,0} is the (+i)-eigenspace of J on the
/// complexification, g^{0,1} its conjugate; dually, the adapted coframe
/// (omega^a) spans the (+i)-eigenspace of the transposed action on covectors.
/// All four bases are reduced echelon bases, so they are deterministic.
class ComplexStructure {
public:
    /// J given column-wise: column j holds the coordinates of J e_j.
    /// Throws OddDimension or ValidationError (J^2 != -id).
    static ComplexStructure from_endomorphism(std::vector<std::vector<Rational>> J);

    int n() const { return n_; }
    int m() const { return n_ / 2; }

    const std::vector<std::vector<Rational>>& J() const { return J_; }

    /// Rows 0..m-1: basis vectors of g^{1,0} over e_1..e_n.
    const Matrix& vectors10() const { return vec10_; }
    const Matrix& vectors01() const { return vec01_; }

    /// Rows 0..m-1: coordinates of the coframe omega^a over e^1..e^n.
    const Matrix& coframe10() const { return cof10_; }
    const Matrix& coframe01() const { return cof01_; }

    /// Whether J preserves the rational span of the input basis. True by
    /// construction here (entries are rationals); reported relative to the
    /// input basis since no lattice is part of the data.
    bool is_rational() const { return true; }

private:
    ComplexStructure() = default;

    int n_ = 0;
    std::vector<std::vector<Rational>> J_;
    Matrix vec10_, vec01_, cof10_, cof01_;
};

struct ClassificationReport {
    bool integrable = false;
    bool abelian_cs = false;    // [g10, g10] = 0
    bool bi_invariant = false;  // [g01, g10] = 0
    bool rational = false;
    int nilpotency_class = 0;
    std::vector<int> lcs_dims;
};

/// [g10, g10] subset g10, the integrability condition.
bool check_integrability(const LieAlgebra& g, const ComplexStructure& cs);

/// Classification flags of an integrable structure; throws NotIntegrable.
ClassificationReport classify(const LieAlgebra& g, const ComplexStructure& cs);

/// The complex nilpotent Lie algebra (g (x) C, [.,.]_delbar) in the basis
/// (g10 basis, g01 basis): (1,0)x(1,0) brackets are dropped, mixed brackets
/// are projected to g10, (0,1)x(0,1) brackets kept whole. The result is
/// re-validated (Jacobi and nilpotency).
LieAlgebra dolbeault_bracket(const LieAlgebra& g, const ComplexStructure& cs);

}  // namespace nilcohom
