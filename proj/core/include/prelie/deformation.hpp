#pragma once

#include <cstdint>
#include <vector>

#include "prelie/cochain.hpp"
#include "prelie/report.hpp"
#include "prelie/reynolds.hpp"

namespace prelie {

// K_t = K_0 + K_1 t + ... + K_N t^N with K_0 = base.K.
struct DeformationSeries {
    ReynoldsData base;
    std::vector<LinearMap> coefficients;  // K_1 .. K_N

    std::size_t order() const noexcept { return coefficients.size(); }
    // K_i for 0 <= i <= N, and the zero map beyond N.
    LinearMap coefficient(std::size_t i) const;
};

// Coefficients of t, t^2 and t^3 in the Reynolds identity for K + t K1, as
// parts "t1", "t2", "t3". The t1 part is cross-checked against d_K K1 = 0.
Report check_linear_deformation(const ReynoldsData& d, const LinearMap& K1);

// Coefficient identity of the Reynolds identity for K_t at every order
// 0..3N (the polynomial K_t has no terms beyond). One part per order.
Report check_formal_deformation(const DeformationSeries& s);

struct Infinitesimal {
    Cochain K1;
    Report cocycle;
};
// Throws UnverifiedSeries unless the series passes check_formal_deformation.
Infinitesimal infinitesimal(const DeformationSeries& s);

// x -> u -> L_x u - R_x u + H(x, Ku), the t-coefficient of psi_t.
LinearMap psi_coefficient(const ReynoldsData& d, const Vec& x);
// K1 - d_K(x): the deformation equivalent to K1 through x.
LinearMap equivalent_deformation(const ReynoldsData& d, const LinearMap& K1, const Vec& x);

// Conditions for (phi_t, psi_t) built from x to be a morphism from K + t K1
// to K + t K1'. Parts "alg-map", "left-action", "right-action", "h-comp",
// "diffe" hold the conditions as printed and decide the verdict; parts with
// the suffix "/re-derived" expand the morphism identities at t and t^2 and
// are reported alongside. The linear-deformation checks of K1 and K1' are
// attached as non-counting parts.
Report check_equivalence_data(const ReynoldsData& d, const LinearMap& K1, const LinearMap& K1p, const Vec& x);

// x . Rbar_u(x) - Rbar_u(x) . x = 0 for every basis u (part "rbar") plus the
// groups "alg-map" .. "h-comp" of check_equivalence_data.
Report check_nijenhuis_element(const ReynoldsData& d, const Vec& x);

// All Nijenhuis elements in lexicographic order; F_p only (InfiniteField).
// Throws BudgetExceeded when p^{dim g} exceeds the budget.
std::vector<Vec> enumerate_nijenhuis(const ReynoldsData& d, std::uint64_t budget = 10'000'000);

// Decides whether Z^1_K equals d_K(Nij(K)) by exhaustive enumeration over
// F_p. Details carry the set sizes; pass means the sufficient condition for
// rigidity holds.
Report rigidity_probe(const ReynoldsData& d, std::uint64_t budget = 10'000'000);

}  // namespace prelie
