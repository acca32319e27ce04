#include "prelie/nsprelie.hpp"

#include <stdexcept>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

void check_ns_shapes(const NSPreLie& ns) {
    std::size_t n = ns.tri.dim();
    if (ns.trl.dim() != n || ns.circ.dim() != n) throw ShapeError("NS tables must have one dimension");
    if (ns.trl.field() != ns.tri.field() || ns.circ.field() != ns.tri.field())
        throw FieldMismatch("NS tables over different fields");
}

void postcondition(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("postcondition failed: ") + what);
}

void require_nijenhuis(const PreLieAlgebra& g, const LinearMap& N) {
    if (!check_nijenhuis(g, N)) throw UnverifiedOperator("N fails the Nijenhuis identity");
}

void require_operator(const ReynoldsData& d) {
    validate_shapes(d);
    if (!is_rcw_reynolds(d)) throw UnverifiedOperator("K fails the RCW Reynolds identity");
}

}  // namespace

Vec NSPreLie::star(const Vec& x, const Vec& y) const { return tri.mul(x, y) + trl.mul(x, y) + circ.mul(x, y); }

Report check_ns_prelie(const NSPreLie& ns) {
    check_ns_shapes(ns);
    const Field& F = ns.field();
    std::size_t n = ns.dim();
    Report a1("A1"), a2("A2"), a3("A3");
    const auto& tr = ns.tri;
    const auto& tl = ns.trl;
    const auto& ci = ns.circ;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec x = unit_vec(F, n, i), y = unit_vec(F, n, j), z = unit_vec(F, n, k);
                Vec xy = ns.star(x, y), yx = ns.star(y, x);
                a1.expect_zero({i, j, k}, (tr.mul(xy, z) - tr.mul(x, tr.mul(y, z))) -
                                              (tr.mul(yx, z) - tr.mul(y, tr.mul(x, z))));
                a2.expect_zero({i, j, k}, (tr.mul(x, tl.mul(y, z)) - tl.mul(tr.mul(x, y), z)) -
                                              (tl.mul(y, ns.star(x, z)) - tl.mul(tl.mul(y, x), z)));
                Vec lhs = ci.mul(xy, z) - ci.mul(x, ns.star(y, z)) + tl.mul(ci.mul(x, y), z) - tr.mul(x, ci.mul(y, z));
                Vec rhs = ci.mul(yx, z) - ci.mul(y, ns.star(x, z)) + tl.mul(ci.mul(y, x), z) - tr.mul(y, ci.mul(x, z));
                a3.expect_zero({i, j, k}, lhs - rhs);
            }
    Report r("ns-prelie");
    r.add_part(std::move(a1));
    r.add_part(std::move(a2));
    r.add_part(std::move(a3));
    return r;
}

PreLieAlgebra subadjacent(const NSPreLie& ns) {
    if (!check_ns_prelie(ns)) throw UnverifiedNS("tables fail the NS-pre-Lie axioms");
    PreLieAlgebra a(ns.field(), ns.dim());
    for (std::size_t i = 0; i < ns.dim(); ++i)
        for (std::size_t j = 0; j < ns.dim(); ++j)
            a.product(i, j) = ns.tri.product(i, j) + ns.trl.product(i, j) + ns.circ.product(i, j);
    postcondition(check_prelie(a).pass, "subadjacent product is pre-Lie");
    return a;
}

Report check_nijenhuis(const PreLieAlgebra& g, const LinearMap& N) {
    std::size_t n = g.dim();
    if (N.rows() != n || N.cols() != n) throw ShapeError("N must be a dim g x dim g matrix");
    if (N.field() != g.field()) throw FieldMismatch("N is over a different field");
    Report r("nijenhuis");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(g.field(), n, i), y = unit_vec(g.field(), n, j);
            Vec Nx = N.apply(x), Ny = N.apply(y);
            Vec inner = g.mul(Nx, y) + g.mul(x, Ny) - N.apply(g.product(i, j));
            r.expect_zero({i, j}, g.mul(Nx, Ny) - N.apply(inner));
        }
    return r;
}

PreLieAlgebra deformed_product(const PreLieAlgebra& g, const LinearMap& N) {
    require_nijenhuis(g, N);
    std::size_t n = g.dim();
    PreLieAlgebra out(g.field(), n);
    PreLieAlgebra sum(g.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(g.field(), n, i), y = unit_vec(g.field(), n, j);
            out.product(i, j) = g.mul(N.apply(x), y) + g.mul(x, N.apply(y)) - N.apply(g.product(i, j));
            sum.product(i, j) = out.product(i, j) + g.product(i, j);
        }
    if (check_prelie(g)) {
        postcondition(check_prelie(out).pass, "deformed product is pre-Lie");
        postcondition(check_prelie(sum).pass, "deformed product is compatible");
    }
    return out;
}

NSPreLie ns_from_nijenhuis(const PreLieAlgebra& g, const LinearMap& N) {
    require_nijenhuis(g, N);
    std::size_t n = g.dim();
    const Field& F = g.field();
    NSPreLie ns(F, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(F, n, i), y = unit_vec(F, n, j);
            ns.tri.product(i, j) = g.mul(N.apply(x), y);
            ns.trl.product(i, j) = g.mul(x, N.apply(y));
            ns.circ.product(i, j) = -N.apply(g.product(i, j));
        }
    if (check_prelie(g)) {
        postcondition(check_ns_prelie(ns).pass, "Nijenhuis construction satisfies the NS axioms");
        postcondition(subadjacent(ns) == deformed_product(g, N), "subadjacent product equals the deformed product");
    }
    return ns;
}

NSPreLie ns_from_reynolds(const ReynoldsData& d) {
    require_operator(d);
    std::size_t m = d.dim_v();
    const Field& F = d.field();
    NSPreLie ns(F, m);
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            Vec eu = unit_vec(F, m, u), ev = unit_vec(F, m, v);
            Vec Ku = d.K.column(u), Kv = d.K.column(v);
            ns.tri.product(u, v) = d.rep.left(Ku, ev);
            ns.trl.product(u, v) = d.rep.right(Kv, eu);
            ns.circ.product(u, v) = d.H.eval({Ku, Kv});
        }
    postcondition(check_ns_prelie(ns).pass, "Reynolds construction satisfies the NS axioms");
    postcondition(subadjacent(ns) == induced_product_raw(d), "subadjacent product equals the induced product");
    return ns;
}

ReynoldsData reynolds_from_ns(const NSPreLie& ns) {
    PreLieAlgebra a = subadjacent(ns);
    std::size_t n = ns.dim();
    const Field& F = ns.field();
    std::vector<Matrix> L, R;
    Cochain H(F, 2, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix l(F, n, n), r(F, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            l.set_column(j, ns.tri.product(i, j));
            r.set_column(j, ns.trl.product(j, i));
            H.set({i}, j, ns.circ.product(i, j));
        }
        L.push_back(std::move(l));
        R.push_back(std::move(r));
    }
    Representation rep = n == 0 ? Representation(F, 0, 0) : Representation(std::move(L), std::move(R));
    ReynoldsData d{std::move(a), std::move(rep), std::move(H), Matrix::identity(F, n)};
    postcondition(check_representation(d.g, d.rep).pass, "(L_>, R_<) is a representation");
    postcondition(check_two_cocycle(d.g, d.rep, d.H).pass, "o is a 2-cocycle");
    postcondition(is_rcw_reynolds(d), "the identity is an operator");
    return d;
}

NSPreLie compatible_ns_from_invertible(const ReynoldsData& d) {
    validate_shapes(d);
    if (d.dim_v() != d.dim_g()) throw ShapeError("compatible NS structure needs dim V == dim g");
    auto Kinv = inverse(d.K);
    if (!Kinv) throw Singular("K is not invertible");
    require_operator(d);
    std::size_t n = d.dim_g();
    const Field& F = d.field();
    NSPreLie ns(F, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(F, n, i), y = unit_vec(F, n, j);
            ns.trl.product(i, j) = d.K.apply(d.rep.right(y, Kinv->apply(x)));
            ns.tri.product(i, j) = d.K.apply(d.rep.left(x, Kinv->apply(y)));
            ns.circ.product(i, j) = d.K.apply(d.H.eval({x, y}));
        }
    if (check_prelie(d.g) && check_representation(d.g, d.rep) && check_two_cocycle(d.g, d.rep, d.H)) {
        postcondition(check_ns_prelie(ns).pass, "invertible construction satisfies the NS axioms");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                postcondition(ns.star(unit_vec(F, n, i), unit_vec(F, n, j)) == d.g.product(i, j),
                              "x * y equals x . y");
    }
    return ns;
}

}  // namespace prelie
