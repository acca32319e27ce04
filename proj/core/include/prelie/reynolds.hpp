#pragma once

#include "prelie/algebra.hpp"
#include "prelie/cochain.hpp"
#include "prelie/matrix.hpp"
#include "prelie/report.hpp"

namespace prelie {

// A pre-Lie algebra g, a representation (V; L, R), a bilinear H: g x g -> V
// and a linear K: V -> g (a dim g x dim V matrix).
struct ReynoldsData {
    PreLieAlgebra g;
    Representation rep;
    Cochain H;
    LinearMap K;

    const Field& field() const { return g.field(); }
    std::size_t dim_g() const { return g.dim(); }
    std::size_t dim_v() const { return rep.dim_v(); }
    ReynoldsData with_operator(LinearMap k) const;
    ReynoldsData lifted() const;
    ReynoldsData reduced(const Field& f) const;
};

// Shape validation shared by every entry point taking ReynoldsData.
void validate_shapes(const ReynoldsData& d);

// Ku.Kv - K(L_{Ku} v + R_{Kv} u + H(Ku, Kv)) for arbitrary u, v in V.
Vec rcw_residual(const ReynoldsData& d, const Vec& u, const Vec& v);
// Early-exit predicate over basis pairs in lexicographic order; H is not rechecked.
bool is_rcw_reynolds(const ReynoldsData& d);
// Full report; throws UnverifiedCocycle when H is not a 2-cocycle.
Report check_rcw_reynolds(const ReynoldsData& d);
void require_rcw_reynolds(const ReynoldsData& d);

// K(x).K(y) = K(K(x).y + x.K(y) + lambda K(x).K(y)).
Report check_weighted_reynolds(const PreLieAlgebra& g, const LinearMap& K, const Scalar& lambda);
// K(x).K(y) = K(K(x).y + x.K(y) - (K(x).D(1)).K(y)); throws NoUnit.
Report check_d_reynolds(const PreLieAlgebra& g, const LinearMap& D, const LinearMap& K);

// x * y = x.K(y) + K(x).y + lambda K(x).K(y); throws UnverifiedOperator.
PreLieAlgebra star_product(const PreLieAlgebra& g, const LinearMap& K, const Scalar& lambda);
// K^{-1} + lambda id; throws Singular or UnverifiedOperator.
LinearMap derivation_from_reynolds(const PreLieAlgebra& g, const LinearMap& K, const Scalar& lambda);
// (D - lambda id)^{-1}; throws Singular or UnverifiedOperator.
LinearMap reynolds_from_derivation(const PreLieAlgebra& g, const LinearMap& D, const Scalar& lambda);

// g (+) V with (x,u).(y,v) = (x.y, L_x v + R_y u + H(x,y)); basis is the
// g-basis followed by the V-basis. Does not verify its inputs.
PreLieAlgebra semidirect_product(const PreLieAlgebra& g, const Representation& rep, const Cochain& H);
// Verified variant: throws UnverifiedCocycle, re-verifies the output.
PreLieAlgebra semidirect(const PreLieAlgebra& g, const Representation& rep, const Cochain& H);

// Closure of span{(Ku, u)} under the twisted semidirect product, decided by
// solving a linear system in the semidirect algebra.
Report check_graph_subalgebra(const ReynoldsData& d);

// u ._K v = L_{Ku} v + R_{Kv} u + H(Ku, Kv), without verification.
PreLieAlgebra induced_product_raw(const ReynoldsData& d);
// Verified variant: throws UnverifiedOperator.
PreLieAlgebra induced_product(const ReynoldsData& d);

struct ShiftIsomorphism {
    Cochain shifted_H;       // H + coboundary(h)
    PreLieAlgebra source;    // g (+)_H V
    PreLieAlgebra target;    // g (+)_{H + dh} V
    LinearMap psi;           // (x, u) -> (x, u - h(x))
};
ShiftIsomorphism shift_isomorphism(const PreLieAlgebra& g, const Representation& rep, const Cochain& H,
                                   const Cochain& h);
// K (id - hK)^{-1}, an operator for H + coboundary(h); throws Singular.
LinearMap shift_operator(const ReynoldsData& d, const Cochain& h);
// K (id + BK)^{-1} for a K-admissible 1-cocycle B; throws NotCocycle, NotAdmissible.
LinearMap gauge_transform(const ReynoldsData& d, const Cochain& B);
// H = -coboundary(h), K = h^{-1}; throws Singular.
ReynoldsData reynolds_from_invertible_cochain(const PreLieAlgebra& g, const Representation& rep, const Cochain& h);

// phi K = K' psi, psi L_x = L'_{phi x} psi, psi R_x = R'_{phi x} psi,
// psi H = H'(phi x phi), and phi a pre-Lie morphism.
Report check_rcw_morphism(const ReynoldsData& a, const ReynoldsData& b, const LinearMap& phi, const LinearMap& psi);

}  // namespace prelie
