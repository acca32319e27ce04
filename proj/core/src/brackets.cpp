#include "prelie/brackets.hpp"

#include <algorithm>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

bool needs_lift(const Field& f) { return f.characteristic() == 2 || f.characteristic() == 3; }

bool all_at_least(const std::vector<std::size_t>& t, std::size_t m) {
    for (auto i : t)
        if (i < m) return false;
    return true;
}

// Basis lookups into a cochain without per-call allocation.
class SlotView {
public:
    explicit SlotView(const GradedElement& c) : c_(c), nonzero_(c.slot_count()), first_(c.degree() - 1) {
        for (std::size_t s = 0; s < c.slot_count(); ++s) nonzero_[s] = !is_zero(c.value(s));
    }

    // The value at basis indices idx[0..degree) up to the returned sign;
    // nullptr when it vanishes.
    const Vec* find(const std::vector<std::size_t>& idx, int& sign) {
        std::copy(idx.begin(), idx.end() - 1, first_.begin());
        sign = sort_with_sign(first_);
        if (sign == 0) return nullptr;
        std::size_t s = c_.slot(first_, idx.back());
        return nonzero_[s] ? &c_.value(s) : nullptr;
    }

private:
    const GradedElement& c_;
    std::vector<char> nonzero_;
    std::vector<std::size_t> first_;
};

// out += coeff * P(.., e_s at position pos, ..) * v[s] summed over s.
void accumulate_one_vec(SlotView& P, std::vector<std::size_t>& idx, std::size_t pos, const Vec& v,
                        const Scalar& coeff, Vec& out) {
    for (std::size_t s = 0; s < v.size(); ++s) {
        if (v[s].is_zero()) continue;
        idx[pos] = s;
        int sign = 0;
        const Vec* w = P.find(idx, sign);
        if (w == nullptr) continue;
        Scalar c = coeff * v[s];
        axpy(out, sign > 0 ? c : -c, *w);
    }
}

}  // namespace

namespace {

void check_diamond_operands(const GradedElement& P, const GradedElement& Q) {
    if (P.field() != Q.field()) throw FieldMismatch("diamond operands over different fields");
    if (P.dim_source() != P.dim_target() || Q.dim_source() != Q.dim_target() ||
        P.dim_source() != Q.dim_source())
        throw ShapeError("diamond needs cochains of one space into itself");
}

// out += sign * (P diamond Q) on slots whose indices are all >= min_index.
void add_diamond(GradedElement& out, const GradedElement& P, const GradedElement& Q, std::size_t min_index,
                 int sign_out) {
    if (P.is_zero() || Q.is_zero()) return;
    const Field& F = P.field();
    std::size_t D = P.dim_source();
    std::size_t p = P.degree() - 1;
    std::size_t q = Q.degree() - 1;
    std::size_t n = p + q + 1;
    SlotView pv(P);
    SlotView qv(Q);
    std::vector<Unshuffle> first;
    if (p >= 1) first = enumerate_unshuffles({q, 1, p - 1});
    std::vector<Unshuffle> second = enumerate_unshuffles({p, q});
    int sgn_pq = (p * q) % 2 == 0 ? sign_out : -sign_out;
    Scalar one = F.one();
    Scalar minus_one = -one;
    std::vector<std::size_t> x(n), qa(q + 1), pa(p + 1);
    for (std::size_t s = 0; s < out.slot_count(); ++s) {
        const auto& t = out.tuple(s / D);
        std::copy(t.begin(), t.end(), x.begin());
        x[n - 1] = s % D;
        if (!all_at_least(x, min_index)) continue;
        Vec& acc = out.value(s);
        int sign = 0;
        for (const auto& u : first) {
            for (std::size_t k = 0; k <= q; ++k) qa[k] = x[u.perm[k]];
            const Vec* inner = qv.find(qa, sign);
            if (inner == nullptr) continue;
            for (std::size_t k = q + 1; k < p + q; ++k) pa[k - q] = x[u.perm[k]];
            pa[p] = x[n - 1];
            accumulate_one_vec(pv, pa, 0, *inner, u.sign * sign * sign_out > 0 ? one : minus_one, acc);
        }
        for (const auto& u : second) {
            for (std::size_t k = p; k < p + q; ++k) qa[k - p] = x[u.perm[k]];
            qa[q] = x[n - 1];
            const Vec* inner = qv.find(qa, sign);
            if (inner == nullptr) continue;
            for (std::size_t k = 0; k < p; ++k) pa[k] = x[u.perm[k]];
            accumulate_one_vec(pv, pa, p, *inner, u.sign * sign * sgn_pq > 0 ? one : minus_one, acc);
        }
    }
}

}  // namespace

GradedElement diamond(const GradedElement& P, const GradedElement& Q, std::size_t min_index) {
    check_diamond_operands(P, Q);
    GradedElement out(P.field(), P.degree() + Q.degree() - 1, P.dim_source(), P.dim_source());
    add_diamond(out, P, Q, min_index, 1);
    return out;
}

GradedElement mn_bracket(const GradedElement& P, const GradedElement& Q, std::size_t min_index) {
    check_diamond_operands(P, Q);
    std::size_t p = P.degree() - 1;
    std::size_t q = Q.degree() - 1;
    GradedElement out(P.field(), p + q + 1, P.dim_source(), P.dim_source());
    add_diamond(out, P, Q, min_index, 1);
    add_diamond(out, Q, P, min_index, (p * q) % 2 == 0 ? -1 : 1);
    return out;
}

GradedElement product_element(const PreLieAlgebra& a) {
    GradedElement mu(a.field(), 2, a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) mu.set({i}, j, a.product(i, j));
    return mu;
}

DerivedBrackets::DerivedBrackets(const ReynoldsData& d) : data_(d) {
    validate_shapes(data_);
    const Field& F = data_.field();
    dg_ = data_.dim_g();
    dw_ = dg_ + data_.dim_v();
    auto widen = [&](const Vec& v, std::size_t offset) {
        Vec w = zero_vec(F, dw_);
        for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
        return w;
    };
    pi_ = GradedElement(F, 2, dw_, dw_);
    h_ = GradedElement(F, 2, dw_, dw_);
    for (std::size_t x = 0; x < dg_; ++x) {
        for (std::size_t y = 0; y < dg_; ++y) {
            pi_.set({x}, y, widen(data_.g.product(x, y), 0));
            h_.set({x}, y, widen(data_.H.eval_basis({x, y}), dg_));
        }
        for (std::size_t u = 0; u < data_.dim_v(); ++u) {
            pi_.set({x}, dg_ + u, widen(data_.rep.L(x).column(u), dg_));
            pi_.set({dg_ + u}, x, widen(data_.rep.R(x).column(u), dg_));
        }
    }
    k_ = GradedElement::from_map(data_.K);
}

void DerivedBrackets::check_v_cochain(const GradedElement& P) const {
    if (P.field() != data_.field()) throw FieldMismatch("bracket operand over a different field");
    if (P.dim_source() != data_.dim_v() || P.dim_target() != dg_)
        throw ShapeError("bracket operands must be cochains V -> g");
}

GradedElement DerivedBrackets::lift(const GradedElement& P) const {
    check_v_cochain(P);
    const Field& F = data_.field();
    std::size_t m = data_.dim_v();
    GradedElement out(F, P.degree(), dw_, dw_);
    for (std::size_t s = 0; s < P.slot_count(); ++s) {
        std::vector<std::size_t> t = P.tuple(s / m);
        for (auto& i : t) i += dg_;
        Vec w = zero_vec(F, dw_);
        for (std::size_t i = 0; i < dg_; ++i) w[i] = P.value(s)[i];
        out.set(t, dg_ + s % m, w);
    }
    return out;
}

GradedElement DerivedBrackets::restrict(const GradedElement& T, std::size_t arity) const {
    const Field& F = data_.field();
    std::size_t m = data_.dim_v();
    GradedElement out(F, arity, m, dg_);
    for (std::size_t s = 0; s < out.slot_count(); ++s) {
        std::vector<std::size_t> idx = out.tuple(s / m);
        idx.push_back(s % m);
        for (auto& i : idx) i += dg_;
        Vec w = T.eval_basis(idx);
        w.resize(dg_);
        out.value(s) = std::move(w);
    }
    return out;
}

const GradedElement& DerivedBrackets::pi_with(const GradedElement& P, GradedElement& scratch) const {
    if (&P != &k_) return scratch = mn_bracket(pi_, lift(P));
    if (!pi_k_) pi_k_ = mn_bracket(pi_, lift(k_));
    return *pi_k_;
}

const GradedElement& DerivedBrackets::h_with(const GradedElement& P, GradedElement& scratch) const {
    if (&P != &k_) return scratch = mn_bracket(h_, lift(P));
    if (!h_k_) h_k_ = mn_bracket(h_, lift(k_));
    return *h_k_;
}

GradedElement DerivedBrackets::binary(const GradedElement& P, const GradedElement& Q) const {
    check_v_cochain(P);
    check_v_cochain(Q);
    std::size_t p = P.degree();
    GradedElement scratch;
    GradedElement b = mn_bracket(pi_with(P, scratch), lift(Q), dg_);
    GradedElement r = restrict(b, p + Q.degree());
    return p % 2 == 1 ? r : data_.field().from_int(-1) * r;
}

GradedElement DerivedBrackets::ternary(const GradedElement& P, const GradedElement& Q,
                                       const GradedElement& R) const {
    check_v_cochain(P);
    check_v_cochain(Q);
    check_v_cochain(R);
    GradedElement scratch;
    GradedElement c;
    if (&P == &k_ && &Q == &k_) {
        if (!h_kk_) h_kk_ = mn_bracket(h_with(k_, scratch), lift(k_));
        c = mn_bracket(*h_kk_, lift(R), dg_);
    } else {
        c = mn_bracket(mn_bracket(h_with(P, scratch), lift(Q)), lift(R), dg_);
    }
    GradedElement r = restrict(c, P.degree() + Q.degree() + R.degree() - 1);
    return Q.degree() % 2 == 0 ? r : data_.field().from_int(-1) * r;
}

GradedElement DerivedBrackets::mc_combination(const GradedElement& K) const {
    const Field& F = data_.field();
    return F.from_rational(mpq_class(1, 2)) * binary(K, K) - F.from_rational(mpq_class(1, 6)) * ternary(K, K, K);
}

GradedElement DerivedBrackets::d_K(const GradedElement& f) const {
    const Field& F = data_.field();
    return binary(k_, f) - F.from_rational(mpq_class(1, 2)) * ternary(k_, k_, f);
}

GradedElement DerivedBrackets::twisted(const GradedElement& P, const GradedElement& Q) const {
    return binary(P, Q) - ternary(k_, P, Q);
}

GradedElement DerivedBrackets::twisted_mc(const GradedElement& Kp) const {
    const Field& F = data_.field();
    return d_K(Kp) + F.from_rational(mpq_class(1, 2)) * twisted(Kp, Kp) -
           F.from_rational(mpq_class(1, 6)) * ternary(Kp, Kp, Kp);
}

GradedElement derived_bracket(const ReynoldsData& d, const GradedElement& P, const GradedElement& Q) {
    return DerivedBrackets(d).binary(P, Q);
}

GradedElement ternary_bracket(const ReynoldsData& d, const GradedElement& P, const GradedElement& Q,
                              const GradedElement& R) {
    return DerivedBrackets(d).ternary(P, Q, R);
}

GradedElement mc_combination(const ReynoldsData& d) {
    if (needs_lift(d.field())) return mc_combination(d.lifted()).reduced(d.field());
    DerivedBrackets b(d);
    return b.mc_combination(b.operator_element());
}

GradedElement d_K(const ReynoldsData& d, const GradedElement& f) {
    if (needs_lift(d.field())) return d_K(d.lifted(), f.lifted()).reduced(d.field());
    return DerivedBrackets(d).d_K(f);
}

GradedElement twisted_bracket(const ReynoldsData& d, const GradedElement& P, const GradedElement& Q) {
    return DerivedBrackets(d).twisted(P, Q);
}

GradedElement twisted_mc(const ReynoldsData& d, const LinearMap& Kp) {
    if (Kp.rows() != d.dim_g() || Kp.cols() != d.dim_v()) throw ShapeError("K' must be dim g x dim V");
    if (needs_lift(d.field())) return twisted_mc(d.lifted(), Kp.lifted()).reduced(d.field());
    return DerivedBrackets(d).twisted_mc(GradedElement::from_map(Kp));
}

namespace {

Report pair_report(const std::string& name, const GradedElement& c) {
    Report r(name);
    std::size_t m = c.dim_source();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) r.expect_zero({u, v}, c.eval_basis({u, v}));
    return r;
}

}  // namespace

Report check_maurer_cartan(const ReynoldsData& d) {
    validate_shapes(d);
    require_two_cocycle(d.g, d.rep, d.H);
    return pair_report("maurer-cartan", mc_combination(d));
}

namespace {

const ReynoldsData& validated_for_twisting(const ReynoldsData& d) {
    validate_shapes(d);
    require_two_cocycle(d.g, d.rep, d.H);
    if (!is_rcw_reynolds(d)) throw UnverifiedOperator("K fails the RCW Reynolds identity");
    return d;
}

}  // namespace

TwistedMcChecker::TwistedMcChecker(const ReynoldsData& d)
    : field_(validated_for_twisting(d).field()),
      dim_g_(d.dim_g()),
      dim_v_(d.dim_v()),
      brackets_(needs_lift(d.field()) ? d.lifted() : d) {}

GradedElement TwistedMcChecker::residual(const LinearMap& Kp) const {
    if (Kp.field() != field_) throw FieldMismatch("K' over a different field");
    if (Kp.rows() != dim_g_ || Kp.cols() != dim_v_) throw ShapeError("K' must be dim g x dim V");
    if (!needs_lift(field_)) return brackets_.twisted_mc(GradedElement::from_map(Kp));
    return brackets_.twisted_mc(GradedElement::from_map(Kp.lifted())).reduced(field_);
}

Report TwistedMcChecker::check(const LinearMap& Kp) const {
    return pair_report("twisted-maurer-cartan", residual(Kp));
}

Report check_twisted_mc(const ReynoldsData& d, const LinearMap& Kp) { return TwistedMcChecker(d).check(Kp); }

}  // namespace prelie
