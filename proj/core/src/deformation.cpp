#include "prelie/deformation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "prelie/errors.hpp"
#include "prelie/kcohomology.hpp"

namespace prelie {

namespace {

void require_operator(const ReynoldsData& d) {
    validate_shapes(d);
    if (!is_rcw_reynolds(d)) throw UnverifiedOperator("K fails the RCW Reynolds identity");
}

void check_operator_shape(const ReynoldsData& d, const LinearMap& M, const char* what) {
    if (M.field() != d.field()) throw FieldMismatch(std::string(what) + " is over a different field");
    if (M.rows() != d.dim_g() || M.cols() != d.dim_v())
        throw ShapeError(std::string(what) + " must be a dim g x dim V matrix");
}

void check_vector(const ReynoldsData& d, const Vec& x) {
    if (x.size() != d.dim_g()) throw ShapeError("x must have dim g coordinates");
    for (const auto& s : x)
        if (s.field() != d.field()) throw FieldMismatch("x is over a different field");
}

// Order-n coefficient of K_t u . K_t v - K_t(L_{K_t u} v + R_{K_t v} u + H(K_t u, K_t v)).
Vec order_residual(const ReynoldsData& d, const std::vector<LinearMap>& Ks, std::size_t n, const Vec& u,
                   const Vec& v) {
    const Field& F = d.field();
    std::size_t N = Ks.size() - 1;
    Vec r = zero_vec(F, d.dim_g());
    for (std::size_t i = 0; i <= std::min(n, N); ++i) {
        std::size_t j = n - i;
        if (j > N) continue;
        Vec Kiu = Ks[i].apply(u), Kjv = Ks[j].apply(v);
        r = r + d.g.mul(Kiu, Kjv);
        r = r - Ks[i].apply(d.rep.left(Ks[j].apply(u), v) + d.rep.right(Kjv, u));
    }
    for (std::size_t i = 0; i <= std::min(n, N); ++i)
        for (std::size_t j = 0; i + j <= n && j <= N; ++j) {
            std::size_t k = n - i - j;
            if (k > N) continue;
            r = r - Ks[i].apply(d.H.eval({Ks[j].apply(u), Ks[k].apply(v)}));
        }
    return r;
}

Vec ad(const PreLieAlgebra& g, const Vec& x, const Vec& y) { return g.commutator(x, y); }

struct Groups {
    Report alg_map{"alg-map"}, left{"left-action"}, right{"right-action"}, h_comp{"h-comp"};
    Report alg_map_r{"alg-map/re-derived"}, left_r{"left-action/re-derived"}, right_r{"right-action/re-derived"},
        h_comp_r{"h-comp/re-derived"};
};

Report two_lines(const std::string& name, Report a, Report b) {
    Report r(name);
    r.add_part(std::move(a));
    r.add_part(std::move(b));
    return r;
}

// Groups alg-map .. h-comp, printed and re-derived.
Groups morphism_groups(const ReynoldsData& d, const Vec& x) {
    const Field& F = d.field();
    std::size_t n = d.dim_g(), m = d.dim_v();
    LinearMap Psi = psi_coefficient(d, x);
    auto e = [&](std::size_t i) { return unit_vec(F, n, i); };
    auto f = [&](std::size_t i) { return unit_vec(F, m, i); };

    Report a1("1"), a2("2"), ar1("1"), ar2("2");
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            Vec ay = ad(d.g, x, e(y)), az = ad(d.g, x, e(z));
            a1.expect_zero({y, z}, d.g.mul(ay, az));
            a2.expect_zero({y, z}, d.g.mul(d.g.product(y, z), x));
            ar1.expect_zero({y, z}, ad(d.g, x, d.g.product(y, z)) - d.g.mul(ay, e(z)) - d.g.mul(e(y), az));
            ar2.expect_zero({y, z}, d.g.mul(ay, az));
        }

    auto action = [&](bool left, Report& printed, Report& rederived) {
        auto act = [&](const Vec& g, const Vec& u) { return left ? d.rep.left(g, u) : d.rep.right(g, u); };
        Report p1("1"), p2("2"), r1("1"), r2("2");
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t u = 0; u < m; ++u) {
                Vec ay = ad(d.g, x, e(y));
                Vec yu = act(e(y), f(u));
                Vec psi_u = Psi.apply(f(u));
                p1.expect_zero({y, u}, d.H.eval({x, d.K.apply(yu)}) - act(e(y), d.H.eval({x, d.K.column(u)})));
                p2.expect_zero({y, u}, act(ay, psi_u));
                r1.expect_zero({y, u}, Psi.apply(yu) - act(ay, f(u)) - act(e(y), psi_u));
                r2.expect_zero({y, u}, act(ay, psi_u));
            }
        printed.add_part(std::move(p1));
        printed.add_part(std::move(p2));
        rederived.add_part(std::move(r1));
        rederived.add_part(std::move(r2));
    };

    Groups g;
    g.alg_map = two_lines("alg-map", std::move(a1), std::move(a2));
    g.alg_map_r = two_lines("alg-map/re-derived", std::move(ar1), std::move(ar2));
    action(true, g.left, g.left_r);
    action(false, g.right, g.right_r);

    Report h1("1"), h2("2"), hr1("1"), hr2("2");
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
            Vec ay = ad(d.g, x, e(y)), az = ad(d.g, x, e(z));
            Vec Hyz = d.H.eval_basis({y, z});
            Vec rhs = d.H.eval({ay, e(z)}) + d.H.eval({e(y), az});
            Vec lhs = d.rep.left(x, Hyz) - d.rep.right(x, Hyz) + d.H.eval({x, d.K.apply(Hyz)});
            h1.expect_zero({y, z}, lhs - rhs);
            h2.expect_zero({y, z}, d.H.eval({ay, az}));
            hr1.expect_zero({y, z}, Psi.apply(Hyz) - rhs);
            hr2.expect_zero({y, z}, d.H.eval({ay, az}));
        }
    g.h_comp = two_lines("h-comp", std::move(h1), std::move(h2));
    g.h_comp_r = two_lines("h-comp/re-derived", std::move(hr1), std::move(hr2));
    return g;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t k, std::uint64_t budget) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (r > budget / p) throw BudgetExceeded("enumeration exceeds the budget of " + std::to_string(budget));
        r *= p;
    }
    if (r > budget) throw BudgetExceeded("enumeration exceeds the budget of " + std::to_string(budget));
    return r;
}

// Digits of idx in base p, most significant first.
std::vector<std::uint64_t> digits(std::uint64_t idx, std::uint64_t p, std::size_t k) {
    std::vector<std::uint64_t> out(k);
    for (std::size_t i = k; i-- > 0;) {
        out[i] = idx % p;
        idx /= p;
    }
    return out;
}

std::vector<std::uint64_t> residues(const Vec& v) {
    std::vector<std::uint64_t> r;
    r.reserve(v.size());
    for (const auto& s : v) r.push_back(s.residue());
    return r;
}

}  // namespace

LinearMap DeformationSeries::coefficient(std::size_t i) const {
    if (i == 0) return base.K;
    if (i <= coefficients.size()) return coefficients[i - 1];
    return Matrix(base.field(), base.dim_g(), base.dim_v());
}

Report check_linear_deformation(const ReynoldsData& d, const LinearMap& K1) {
    require_operator(d);
    check_operator_shape(d, K1, "K1");
    std::vector<LinearMap> Ks{d.K, K1};
    Report r("linear-deformation");
    const Field& F = d.field();
    std::size_t m = d.dim_v();
    for (std::size_t n = 1; n <= 3; ++n) {
        Report part("t" + std::to_string(n));
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v)
                part.expect_zero({u, v}, order_residual(d, Ks, n, unit_vec(F, m, u), unit_vec(F, m, v)));
        r.add_part(std::move(part));
    }
    bool cocycle = coboundary_K_unchecked(d, Cochain::from_map(K1)).is_zero();
    if (cocycle != r.parts[0].pass)
        throw std::logic_error("postcondition failed: t1 condition disagrees with the cocycle condition");
    r.detail("cocycle", cocycle ? "true" : "false");
    return r;
}

Report check_formal_deformation(const DeformationSeries& s) {
    validate_shapes(s.base);
    for (const auto& k : s.coefficients) check_operator_shape(s.base, k, "series coefficient");
    std::vector<LinearMap> Ks{s.base.K};
    for (const auto& k : s.coefficients) Ks.push_back(k);
    std::size_t N = s.order();
    const Field& F = s.base.field();
    std::size_t m = s.base.dim_v();
    Report r("formal-deformation");
    r.detail("orders", "0.." + std::to_string(3 * N));
    std::string first_failure;
    for (std::size_t n = 0; n <= 3 * N; ++n) {
        Report part("order-" + std::to_string(n));
        for (std::size_t u = 0; u < m; ++u)
            for (std::size_t v = 0; v < m; ++v)
                part.expect_zero({u, v}, order_residual(s.base, Ks, n, unit_vec(F, m, u), unit_vec(F, m, v)));
        if (!part.pass && first_failure.empty()) first_failure = std::to_string(n);
        r.add_part(std::move(part));
    }
    if (!first_failure.empty()) r.detail("first_failing_order", first_failure);
    return r;
}

Infinitesimal infinitesimal(const DeformationSeries& s) {
    if (!check_formal_deformation(s)) throw UnverifiedSeries("series is not a formal deformation");
    LinearMap K1 = s.coefficient(1);
    Cochain c = Cochain::from_map(K1);
    Cochain dk = coboundary_K(s.base, c);
    Report rep("cocycle");
    std::size_t m = s.base.dim_v();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) rep.expect_zero({u, v}, dk.eval_basis({u, v}));
    return {std::move(c), std::move(rep)};
}

LinearMap psi_coefficient(const ReynoldsData& d, const Vec& x) {
    validate_shapes(d);
    check_vector(d, x);
    std::size_t m = d.dim_v();
    Matrix out(d.field(), m, m);
    for (std::size_t u = 0; u < m; ++u) {
        Vec eu = unit_vec(d.field(), m, u);
        out.set_column(u, d.rep.left(x, eu) - d.rep.right(x, eu) + d.H.eval({x, d.K.column(u)}));
    }
    return out;
}

LinearMap equivalent_deformation(const ReynoldsData& d, const LinearMap& K1, const Vec& x) {
    check_operator_shape(d, K1, "K1");
    check_vector(d, x);
    return K1 - coboundary_K_degree0(d, x);
}

Report check_equivalence_data(const ReynoldsData& d, const LinearMap& K1, const LinearMap& K1p, const Vec& x) {
    require_operator(d);
    check_operator_shape(d, K1, "K1");
    check_operator_shape(d, K1p, "K1'");
    check_vector(d, x);
    const Field& F = d.field();
    std::size_t m = d.dim_v();
    Groups g = morphism_groups(d, x);
    LinearMap Psi = psi_coefficient(d, x);

    Report d1("1"), d2("2");
    for (std::size_t u = 0; u < m; ++u) {
        Vec eu = unit_vec(F, m, u);
        Vec Ku = d.K.column(u), K1u = K1.column(u), psi_u = Psi.apply(eu);
        d1.expect_zero({u}, K1u + d.g.mul(x, Ku) - d.g.mul(Ku, x) - d.K.apply(psi_u) - K1p.column(u));
        d2.expect_zero({u}, d.g.mul(x, K1u) - d.g.mul(K1u, x) - K1p.apply(psi_u));
    }
    Report diffe = two_lines("diffe", std::move(d1), std::move(d2));
    Report diffe_r = diffe;
    diffe_r.name = "diffe/re-derived";

    Report r("equivalence");
    r.add_part(std::move(g.alg_map));
    r.add_part(std::move(g.left));
    r.add_part(std::move(g.right));
    r.add_part(std::move(g.h_comp));
    r.add_part(std::move(diffe));
    Report rd("re-derived");
    rd.add_part(std::move(g.alg_map_r));
    rd.add_part(std::move(g.left_r));
    rd.add_part(std::move(g.right_r));
    rd.add_part(std::move(g.h_comp_r));
    rd.add_part(std::move(diffe_r));
    r.add_part(std::move(rd), false);
    Report l1 = check_linear_deformation(d, K1);
    l1.name = "K1-linear";
    Report l2 = check_linear_deformation(d, K1p);
    l2.name = "K1'-linear";
    r.add_part(std::move(l1), false);
    r.add_part(std::move(l2), false);
    return r;
}

Report check_nijenhuis_element(const ReynoldsData& d, const Vec& x) {
    require_operator(d);
    check_vector(d, x);
    const Field& F = d.field();
    std::size_t m = d.dim_v();
    Report rbar("rbar");
    for (std::size_t u = 0; u < m; ++u) {
        Vec Ku = d.K.column(u);
        Vec rb = d.g.mul(x, Ku) - d.K.apply(d.rep.left(x, unit_vec(F, m, u))) - d.K.apply(d.H.eval({x, Ku}));
        rbar.expect_zero({u}, d.g.mul(x, rb) - d.g.mul(rb, x));
    }
    Groups g = morphism_groups(d, x);
    Report r("nijenhuis-element");
    r.add_part(std::move(rbar));
    r.add_part(std::move(g.alg_map));
    r.add_part(std::move(g.left));
    r.add_part(std::move(g.right));
    r.add_part(std::move(g.h_comp));
    Report rd("re-derived");
    rd.add_part(std::move(g.alg_map_r));
    rd.add_part(std::move(g.left_r));
    rd.add_part(std::move(g.right_r));
    rd.add_part(std::move(g.h_comp_r));
    r.add_part(std::move(rd), false);
    return r;
}

std::vector<Vec> enumerate_nijenhuis(const ReynoldsData& d, std::uint64_t budget) {
    const Field& F = d.field();
    if (F.is_rational()) throw InfiniteField("Nijenhuis elements are enumerated over prime fields only");
    require_operator(d);
    std::size_t n = d.dim_g();
    std::uint64_t p = F.characteristic();
    std::uint64_t total = checked_power(p, n, budget);
    return detail::parallel_collect<Vec>(total, detail::default_workers(),
                                         [&](std::uint64_t begin, std::uint64_t end, std::vector<Vec>& out) {
                                             for (std::uint64_t i = begin; i < end; ++i) {
                                                 Vec x;
                                                 for (auto dgt : digits(i, p, n)) x.push_back(Scalar(dgt, p));
                                                 if (check_nijenhuis_element(d, x)) out.push_back(std::move(x));
                                             }
                                         });
}

Report rigidity_probe(const ReynoldsData& d, std::uint64_t budget) {
    const Field& F = d.field();
    if (F.is_rational()) throw InfiniteField("the rigidity probe needs a prime field");
    require_operator(d);
    std::uint64_t p = F.characteristic();
    KernelBasis z1 = kernel(coboundary_K_matrix(d, 1));
    std::uint64_t z_count = checked_power(p, z1.dim(), budget);
    std::set<std::vector<std::uint64_t>> cocycles;
    for (std::uint64_t i = 0; i < z_count; ++i) {
        auto c = digits(i, p, z1.dim());
        Vec v = zero_vec(F, z1.ambient);
        for (std::size_t k = 0; k < c.size(); ++k) axpy(v, Scalar(c[k], p), z1.basis[k]);
        cocycles.insert(residues(v));
    }
    std::vector<Vec> nij = enumerate_nijenhuis(d, budget);
    std::set<std::vector<std::uint64_t>> image;
    for (const auto& x : nij) image.insert(residues(Cochain::from_map(coboundary_K_degree0(d, x)).flatten()));

    Report r("rigidity");
    r.detail("dimZ1", std::to_string(z1.dim()));
    r.detail("Z1_size", std::to_string(cocycles.size()));
    r.detail("nij_size", std::to_string(nij.size()));
    r.detail("image_size", std::to_string(image.size()));
    bool equal = cocycles == image;
    r.detail("condition", equal ? "holds" : "fails");
    if (!equal) r.pass = false;
    return r;
}

}  // namespace prelie
