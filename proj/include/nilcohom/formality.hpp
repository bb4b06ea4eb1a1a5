#pragma once

#include <string>
#include <vector>

#include "nilcohom/cohomology.hpp"

namespace nilcohom {

/// Triple Massey product <a, b, c> with its indeterminacy. The product is
/// defined when [a][b] = [b][c] = 0; with primitives D x = rep(a)^rep(b) and
/// D y = rep(b)^rep(c) the representative is x^rep(c) - (-1)^|a| rep(a)^y,
/// taken modulo [a]·H + H·[c]. The vanishes verdict does not depend on the
/// primitive choice (and is invariant under the usual sign conventions).
struct MasseyResult {
    DgaKind dga = DgaKind::DeRham;
    CohomologyClass a, b, c;
    bool defined = false;
    CohomologyClass representative;
    std::vector<CohomologyClass> indeterminacy_basis;
    bool vanishes = true;
    Form primitive_x{1, BasisKind::Real};
    Form primitive_y{1, BasisKind::Real};
};

MasseyResult triple_massey(const GradedCohomology& table, const CohomologyClass& a,
                           const CohomologyClass& b, const CohomologyClass& c);

/// Same, with caller-supplied primitives (they must satisfy D x = a^b and
/// D y = b^c; checked). Exists so perturbation tests can re-run the
/// construction with different primitive choices.
MasseyResult triple_massey_with_primitives(const GradedCohomology& table,
                                           const CohomologyClass& a,
                                           const CohomologyClass& b,
                                           const CohomologyClass& c, const Form& x,
                                           const Form& y);

/// All defined, non-vanishing triple products of basis classes with
/// |a|+|b|+|c| <= max_total_degree, in deterministic enumeration order.
/// An empty result does not certify formality.
std::vector<MasseyResult> massey_search(const GradedCohomology& table,
                                        int max_total_degree);

struct Verdict {
    bool formal = false;
    std::string reason;
};

struct VerdictReport {
    Verdict derham_formal;
    Verdict dolbeault_formal;
    Verdict zero_star_formal;
    std::vector<MasseyResult> witnesses;
    int massey_search_bound = 0;
};

/// Formality of the de Rham (Chevalley-Eilenberg), Dolbeault, and
/// (0,*)-Dolbeault algebras. Verdicts are decided by the abelianness
/// criteria, never by the witness search; Massey witnesses are attached as
/// corroborating evidence only.
VerdictReport formality_verdicts(const LieAlgebra& g, const ComplexStructure& cs,
                                 int massey_search_bound = 4);

}  // namespace nilcohom
