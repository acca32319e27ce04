#pragma once

#include <optional>

#include <cstddef>

#include "prelie/cochain.hpp"
#include "prelie/report.hpp"
#include "prelie/reynolds.hpp"

namespace prelie {

// An element of C^{p+1}: its arity is Cochain::degree() and its graded
// degree is arity - 1.
using GradedElement = Cochain;

inline std::size_t graded_degree(const GradedElement& c) { return c.degree() - 1; }

// P <> Q for P in C^{p+1}(X, X), Q in C^{q+1}(X, X):
//   sum over S(q,1,p-1) of sgn P(Q(x_s1..x_s(q+1)), x_s(q+2)..x_s(p+q), x_last)
// + (-1)^{pq} sum over S(p,q) of sgn P(x_s1..x_sp, Q(x_s(p+1)..x_s(p+q), x_last)).
// Slots whose indices are not all >= min_index are left zero.
GradedElement diamond(const GradedElement& P, const GradedElement& Q, std::size_t min_index = 0);
// [P, Q] = P <> Q - (-1)^{pq} Q <> P.
GradedElement mn_bracket(const GradedElement& P, const GradedElement& Q, std::size_t min_index = 0);
// The product of a pre-Lie algebra as an element of C^2(g, g), and back.
GradedElement product_element(const PreLieAlgebra& a);

// Binary and ternary brackets on cochains V -> g, computed as nested
// brackets on W = g (+) V:
//   [[P, Q]]    = (-1)^{p-1} pr [[pi, P^], Q^]
//   [[P, Q, R]] = (-1)^{q}   pr [[[H^, P^], Q^], R^]
// where pi = mu + L + R, H^ is H viewed in C^2(W, W), P^ lifts P to
// C^p(W, W) and pr keeps V-inputs and the g-component; p and q are arities.
// Inner brackets with the operator K are cached, so an instance must not be
// shared between threads.
class DerivedBrackets {
public:
    explicit DerivedBrackets(const ReynoldsData& d);

    const ReynoldsData& data() const noexcept { return data_; }
    // K as a cochain V -> g; passing this object lets the brackets reuse cached terms.
    const GradedElement& operator_element() const noexcept { return k_; }
    GradedElement lift(const GradedElement& P) const;
    GradedElement restrict(const GradedElement& T, std::size_t arity) const;

    GradedElement binary(const GradedElement& P, const GradedElement& Q) const;
    GradedElement ternary(const GradedElement& P, const GradedElement& Q, const GradedElement& R) const;

    // 1/2 [[K,K]] - 1/6 [[K,K,K]]
    GradedElement mc_combination(const GradedElement& K) const;
    // d_K f = [[K, f]] - 1/2 [[K, K, f]]
    GradedElement d_K(const GradedElement& f) const;
    // [[P, Q]]_K = [[P, Q]] - [[K, P, Q]]
    GradedElement twisted(const GradedElement& P, const GradedElement& Q) const;
    // d_K K' + 1/2 [[K', K']]_K - 1/6 [[K', K', K']]
    GradedElement twisted_mc(const GradedElement& Kp) const;

private:
    void check_v_cochain(const GradedElement& P) const;
    // [[pi, P^]] and [[H^, P^]]; cached when P is the operator, otherwise
    // computed into scratch.
    const GradedElement& pi_with(const GradedElement& P, GradedElement& scratch) const;
    const GradedElement& h_with(const GradedElement& P, GradedElement& scratch) const;

    ReynoldsData data_;
    std::size_t dg_ = 0;
    std::size_t dw_ = 0;
    GradedElement pi_;
    GradedElement h_;
    GradedElement k_;
    mutable std::optional<GradedElement> pi_k_;
    mutable std::optional<GradedElement> h_k_;
    mutable std::optional<GradedElement> h_kk_;
};

// Free-function forms. Combinations involving 1/2 or 1/6 over F_2 and F_3 are
// evaluated on the integer lift over Q and reduced.
GradedElement derived_bracket(const ReynoldsData& d, const GradedElement& P, const GradedElement& Q);
GradedElement ternary_bracket(const ReynoldsData& d, const GradedElement& P, const GradedElement& Q,
                              const GradedElement& R);
GradedElement mc_combination(const ReynoldsData& d);
GradedElement d_K(const ReynoldsData& d, const GradedElement& f);
GradedElement twisted_bracket(const ReynoldsData& d, const GradedElement& P, const GradedElement& Q);
GradedElement twisted_mc(const ReynoldsData& d, const LinearMap& Kp);

// Throw UnverifiedCocycle when H is not a 2-cocycle; check_twisted_mc also
// throws UnverifiedOperator when K itself is not an operator.
Report check_maurer_cartan(const ReynoldsData& d);
Report check_twisted_mc(const ReynoldsData& d, const LinearMap& Kp);

// check_twisted_mc for many K' against one (g, V, H, K): the data is validated
// once and the brackets involving K are reused. Not safe for concurrent use.
class TwistedMcChecker {
public:
    explicit TwistedMcChecker(const ReynoldsData& d);
    GradedElement residual(const LinearMap& Kp) const;
    Report check(const LinearMap& Kp) const;

private:
    Field field_;
    std::size_t dim_g_ = 0;
    std::size_t dim_v_ = 0;
    DerivedBrackets brackets_;
};

}  // namespace prelie
