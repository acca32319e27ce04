#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prelie/cochain.hpp"
#include "prelie/reynolds.hpp"

namespace prelie {

// (g; Lbar, Rbar) as a representation of (V, ._K):
//   Lbar_u x = Ku.x - K(R_x u) - K H(Ku, x)
//   Rbar_u x = x.Ku - K(L_x u) - K H(x, Ku)
Representation induced_representation_raw(const ReynoldsData& d);
// Verified variant: throws UnverifiedOperator, re-verifies the output.
Representation induced_representation(const ReynoldsData& d);

// d_K f: the coboundary of (V, ._K) with coefficients in (g; Lbar, Rbar).
// f is a cochain V -> g. Throws UnverifiedOperator for unverified data.
Cochain coboundary_K(const ReynoldsData& d, const Cochain& f);
// Same without verifying d; callers guarantee the data is Reynolds.
Cochain coboundary_K_unchecked(const ReynoldsData& d, const Cochain& f);
Matrix coboundary_K_matrix(const ReynoldsData& d, std::size_t degree);

// Degree-zero differential on x in g:
//   u -> K(L_x u - R_x u + H(x, Ku)) - x.Ku + Ku.x
LinearMap coboundary_K_degree0(const ReynoldsData& d, const Vec& x);

struct KCohomologyReport {
    CohomologyReport dims;
    std::string operator_hash;
};
KCohomologyReport cohomology_K(const ReynoldsData& d, std::size_t degree);
// Stable 64-bit FNV-1a digest of the operator entries, as 16 hex digits.
std::string operator_hash(const LinearMap& K);

// Second code path: the term-by-term expansion of d_K in eight groups.
// Printed: groups 4-6 as single terms at the last position (group 6 summed
// over the free index), group 7 with L_{Ku_{n+1}} u_i, group 8 over
// i < j <= n+1 with sign (-1)^i. Amended: groups 4-6 summed over i with
// (-1)^{i+1}, group 7 with R_{Ku_{n+1}} u_i, group 8 over i < j <= n with
// sign (-1)^{i+j}.
enum class Reading { Printed, Amended };

struct ExplicitExpansion {
    std::vector<Cochain> groups;  // eight term groups
    Cochain total;
};
ExplicitExpansion coboundary_K_explicit(const ReynoldsData& d, const Cochain& f, Reading reading);

struct ExplicitComparison {
    bool printed_matches = false;
    bool amended_matches = false;
    // 1-based indices of term groups whose two readings differ on this input.
    std::vector<std::size_t> differing_groups;
};
ExplicitComparison compare_explicit_coboundary_K(const ReynoldsData& d, const Cochain& f);

}  // namespace prelie
