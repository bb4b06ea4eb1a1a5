#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilcohom/complex_structure.hpp"
#include "nilcohom/form.hpp"
#include "nilcohom/lie_algebra.hpp"

namespace nilcohom {

/// Degree-1 derivation of the exterior algebra, stored by its action on the
/// generator covectors and extended by the Leibniz rule.
class Differential {
public:
    Differential(int n, BasisKind kind, std::vector<Form> generator_images,
                 std::optional<std::pair<int, int>> bigrade_shift = std::nullopt)
        : n_(n), kind_(kind), images_(std::move(generator_images)),
          shift_(bigrade_shift) {}

    int n() const { return n_; }
    BasisKind kind() const { return kind_; }
    std::optional<std::pair<int, int>> bigrade_shift() const { return shift_; }

    const Form& generator_image(int idx0) const { return images_[idx0]; }

    /// Leibniz extension to arbitrary forms.
    Form apply(const Form& f) const;

    /// D(D(gen)) = 0 for every generator; with Leibniz this forces D^2 = 0
    /// on the whole algebra.
    bool squares_to_zero() const;

private:
    int n_;
    BasisKind kind_;
    std::vector<Form> images_;
    std::optional<std::pair<int, int>> shift_;
};

/// Chevalley-Eilenberg differential of g in the real coframe. Sign
/// convention: (d a)(x, y) = -a([x, y]), i.e. d e^k = -sum_{i<j} c^k_ij e^ij.
/// Dimension counts and all verdicts are invariant under the opposite
/// convention; structure equations in reports follow this one.
Differential ce_differential(const LieAlgebra& g);

struct HodgeSplit {
    Differential del;     // (1,0) shift
    Differential delbar;  // (0,1) shift
    Differential dc;      // i(delbar - del), the twisted differential
};

/// Expresses d in the adapted bigraded coframe and splits it by shift.
/// A (0,2) component on an unbarred generator (or (2,0) on a barred one) is
/// exactly the integrability failure and is reported via NotIntegrable.
HodgeSplit hodge_split(const LieAlgebra& g, const ComplexStructure& cs);

/// d expressed in the bigraded coframe (equals del + delbar termwise).
Differential complexified_ce(const LieAlgebra& g, const ComplexStructure& cs);

/// Multiplicative action of the complex structure on bigraded forms: a
/// (p,q) term is scaled by i^(q-p). Conjugation by this action turns d into
/// the twisted differential, which cross-checks dc.
Form complex_structure_action(const Form& f, bool inverse);

}  // namespace nilcohom
