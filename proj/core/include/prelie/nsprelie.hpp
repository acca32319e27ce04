#pragma once

#include "prelie/algebra.hpp"
#include "prelie/report.hpp"
#include "prelie/reynolds.hpp"

namespace prelie {

// Three bilinear operations tri (x > y), trl (x < y) and circ (x o y) on
// one space, stored as independent structure-constant tables.
struct NSPreLie {
    PreLieAlgebra tri;
    PreLieAlgebra trl;
    PreLieAlgebra circ;

    NSPreLie() = default;
    NSPreLie(const Field& f, std::size_t dim) : tri(f, dim), trl(f, dim), circ(f, dim) {}

    const Field& field() const { return tri.field(); }
    std::size_t dim() const { return tri.dim(); }
    // x * y = x > y + x < y + x o y
    Vec star(const Vec& x, const Vec& y) const;

    friend bool operator==(const NSPreLie& a, const NSPreLie& b) {
        return a.tri == b.tri && a.trl == b.trl && a.circ == b.circ;
    }
};

// Axioms A1, A2, A3 on basis triples, one part each.
Report check_ns_prelie(const NSPreLie& ns);
// (A, *); throws UnverifiedNS.
PreLieAlgebra subadjacent(const NSPreLie& ns);

// Nx.Ny = N(Nx.y + x.Ny - N(x.y)).
Report check_nijenhuis(const PreLieAlgebra& g, const LinearMap& N);
// x ._N y = Nx.y + x.Ny - N(x.y); throws UnverifiedOperator.
PreLieAlgebra deformed_product(const PreLieAlgebra& g, const LinearMap& N);

// x > y = N(x).y, x < y = x.N(y), x o y = -N(x.y); throws UnverifiedOperator.
NSPreLie ns_from_nijenhuis(const PreLieAlgebra& g, const LinearMap& N);
// On V: u > v = L_{Ku} v, u < v = R_{Kv} u, u o v = H(Ku, Kv); throws UnverifiedOperator.
NSPreLie ns_from_reynolds(const ReynoldsData& d);
// (A, *) with representation (L_>, R_<), H = o and K = id; throws UnverifiedNS.
ReynoldsData reynolds_from_ns(const NSPreLie& ns);
// On g: x < y = K(R_y K^{-1} x), x > y = K(L_x K^{-1} y), x o y = K H(x, y).
// Throws ShapeError when dim V != dim g, Singular when K is not invertible
// and UnverifiedOperator when K is not an operator.
NSPreLie compatible_ns_from_invertible(const ReynoldsData& d);

}  // namespace prelie
