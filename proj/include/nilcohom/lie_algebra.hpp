#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nilcohom/linalg.hpp"
#include "nilcohom/scalar.hpp"

namespace nilcohom {

/// Structure constants c^k_{ij}: key (i, j) with 1 <= i < j <= n maps to the
/// sparse expansion of [e_i, e_j] = sum_k c^k_{ij} e_k. Antisymmetry is
/// implicit in the storage: only i < j is stored, [e_j, e_i] negates.
using StructureConstants = std::map<std::pair<int, int>, std::map<int, GaussianRational>>;

struct JacobiTriple {
    int i, j, k;
    Vec residual;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

class JacobiViolation : public Error {
public:
    explicit JacobiViolation(std::vector<JacobiTriple> triples);
    std::vector<JacobiTriple> triples;
};

/// Finite-dimensional Lie algebra given by basis and structure constants,
/// over Q or Q(i). Immutable after construction.
class LieAlgebra {
public:
    /// Validating factory: checks index ranges and the Jacobi identity for
    /// every triple i < j < k. Throws JacobiViolation listing all violated
    /// triples with their residual vectors.
    static LieAlgebra validate(int dim, const StructureConstants& constants,
                               std::vector<std::string> labels = {});

    /// Skips the Jacobi check. For callers that already hold a proof
    /// (conversion code paths, randomized test harnesses).
    static LieAlgebra trusted(int dim, StructureConstants constants,
                              std::vector<std::string> labels = {});

    int dim() const { return dim_; }

    /// True when every structure constant is real (field tag Q vs Q(i)).
    bool is_real() const;
    bool is_abelian() const { return constants_.empty(); }

    const StructureConstants& constants() const { return constants_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// [e_x, e_y] as a dense coefficient vector; x, y 1-based, any order.
    Vec bracket_basis(int x, int y) const;

    /// Bilinear extension of the bracket to arbitrary vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

private:
    LieAlgebra(int dim, StructureConstants constants, std::vector<std::string> labels)
        : dim_(dim), constants_(std::move(constants)), labels_(std::move(labels)) {}

    int dim_;
    StructureConstants constants_;
    std::vector<std::string> labels_;
};

/// Jacobi residuals of a raw antisymmetric tensor; empty iff the tensor
/// defines a Lie algebra.
std::vector<JacobiTriple> jacobi_violations(int dim, const StructureConstants& constants);

struct LowerCentralSeries {
    std::vector<int> dims;  // dim g, dim [g,g], ... down to 0
    int nilpotency_class;   // dims.size() - 1
};

/// Dimensions of g >= [g,g] >= [g,[g,g]] >= ... until the series reaches 0.
/// Throws NotNilpotent when it stabilizes at a nonzero dimension.
LowerCentralSeries lower_central_series(const LieAlgebra& g);

}  // namespace nilcohom
