#include "prelie/reynolds.hpp"

#include <stdexcept>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

void postcondition(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("postcondition failed: ") + what);
}

void require_square(const LinearMap& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n)
        throw ShapeError(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
}

// Throws UnverifiedCocycle / UnverifiedOperator for unverified data.
void require_verified(const ReynoldsData& d) {
    validate_shapes(d);
    require_two_cocycle(d.g, d.rep, d.H);
    if (!is_rcw_reynolds(d)) throw UnverifiedOperator("K fails the RCW Reynolds identity");
}

}  // namespace

ReynoldsData ReynoldsData::with_operator(LinearMap k) const {
    ReynoldsData out = *this;
    out.K = std::move(k);
    return out;
}

ReynoldsData ReynoldsData::lifted() const { return {g.lifted(), rep.lifted(), H.lifted(), K.lifted()}; }

ReynoldsData ReynoldsData::reduced(const Field& f) const {
    return {g.reduced(f), rep.reduced(f), H.reduced(f), K.reduced(f)};
}

void validate_shapes(const ReynoldsData& d) {
    std::size_t n = d.g.dim();
    std::size_t m = d.rep.dim_v();
    if (d.rep.dim_g() != n) throw ShapeError("representation does not match the algebra dimension");
    if (d.H.degree() != 2 || d.H.dim_source() != n || d.H.dim_target() != m)
        throw ShapeError("H must be a bilinear map g x g -> V");
    if (d.K.rows() != n || d.K.cols() != m)
        throw ShapeError("K must be a " + std::to_string(n) + "x" + std::to_string(m) + " matrix (V -> g)");
    const Field& f = d.g.field();
    if ((n && d.rep.field() != f) || d.H.field() != f || d.K.field() != f)
        throw FieldMismatch("Reynolds data mixes scalar fields");
}

Vec rcw_residual(const ReynoldsData& d, const Vec& u, const Vec& v) {
    Vec Ku = d.K.apply(u);
    Vec Kv = d.K.apply(v);
    Vec inner = d.rep.left(Ku, v) + d.rep.right(Kv, u) + d.H.eval({Ku, Kv});
    return d.g.mul(Ku, Kv) - d.K.apply(inner);
}

bool is_rcw_reynolds(const ReynoldsData& d) {
    std::size_t m = d.dim_v();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            if (!is_zero(rcw_residual(d, unit_vec(d.field(), m, u), unit_vec(d.field(), m, v)))) return false;
    return true;
}

Report check_rcw_reynolds(const ReynoldsData& d) {
    validate_shapes(d);
    require_two_cocycle(d.g, d.rep, d.H);
    Report r("rcw-reynolds");
    std::size_t m = d.dim_v();
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v)
            r.expect_zero({u, v}, rcw_residual(d, unit_vec(d.field(), m, u), unit_vec(d.field(), m, v)));
    return r;
}

void require_rcw_reynolds(const ReynoldsData& d) { require_verified(d); }

Report check_weighted_reynolds(const PreLieAlgebra& g, const LinearMap& K, const Scalar& lambda) {
    std::size_t n = g.dim();
    require_square(K, n, "weighted Reynolds operator");
    Report r("weighted-reynolds");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(g.field(), n, i), y = unit_vec(g.field(), n, j);
            Vec Kx = K.column(i), Ky = K.column(j);
            Vec KxKy = g.mul(Kx, Ky);
            Vec inner = g.mul(Kx, y) + g.mul(x, Ky) + lambda * KxKy;
            r.expect_zero({i, j}, KxKy - K.apply(inner));
        }
    }
    return r;
}

Report check_d_reynolds(const PreLieAlgebra& g, const LinearMap& D, const LinearMap& K) {
    if (!g.unit()) throw NoUnit("D-Reynolds operators need a unital algebra");
    std::size_t n = g.dim();
    require_square(D, n, "D");
    require_square(K, n, "D-Reynolds operator");
    Vec D1 = D.apply(*g.unit());
    Report r("d-reynolds");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(g.field(), n, i), y = unit_vec(g.field(), n, j);
            Vec Kx = K.column(i), Ky = K.column(j);
            Vec inner = g.mul(Kx, y) + g.mul(x, Ky) - g.mul(g.mul(Kx, D1), Ky);
            r.expect_zero({i, j}, g.mul(Kx, Ky) - K.apply(inner));
        }
    }
    return r;
}

PreLieAlgebra star_product(const PreLieAlgebra& g, const LinearMap& K, const Scalar& lambda) {
    if (!check_weighted_reynolds(g, K, lambda))
        throw UnverifiedOperator("K is not a Reynolds operator of the given weight");
    std::size_t n = g.dim();
    PreLieAlgebra star(g.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(g.field(), n, i), y = unit_vec(g.field(), n, j);
            Vec Kx = K.column(i), Ky = K.column(j);
            star.product(i, j) = g.mul(x, Ky) + g.mul(Kx, y) + lambda * g.mul(Kx, Ky);
            postcondition(g.mul(Kx, Ky) == K.apply(star.product(i, j)), "K(x).K(y) = K(x * y)");
        }
    }
    postcondition(check_prelie(star).pass, "star product is pre-Lie");
    postcondition(check_weighted_reynolds(star, K, lambda).pass, "K is a weighted Reynolds operator on (g, *)");
    postcondition(check_morphism(star, g, K).pass, "K is a morphism (g, *) -> (g, .)");
    return star;
}

LinearMap derivation_from_reynolds(const PreLieAlgebra& g, const LinearMap& K, const Scalar& lambda) {
    if (!check_weighted_reynolds(g, K, lambda))
        throw UnverifiedOperator("K is not a Reynolds operator of the given weight");
    auto inv = inverse(K);
    if (!inv) throw Singular("K is not invertible");
    LinearMap D = *inv + lambda * Matrix::identity(g.field(), g.dim());
    postcondition(check_derivation(g, D).pass, "K^{-1} + lambda id is a derivation");
    return D;
}

LinearMap reynolds_from_derivation(const PreLieAlgebra& g, const LinearMap& D, const Scalar& lambda) {
    if (!check_derivation(g, D)) throw UnverifiedOperator("D is not a derivation");
    auto inv = inverse(D - lambda * Matrix::identity(g.field(), g.dim()));
    if (!inv) throw Singular("D - lambda id is not invertible");
    postcondition(check_weighted_reynolds(g, *inv, lambda).pass, "(D - lambda id)^{-1} is a weighted Reynolds operator");
    return *inv;
}

PreLieAlgebra semidirect_product(const PreLieAlgebra& g, const Representation& rep, const Cochain& H) {
    std::size_t n = g.dim();
    std::size_t m = rep.dim_v();
    if (rep.dim_g() != n || H.degree() != 2 || H.dim_source() != n || H.dim_target() != m)
        throw ShapeError("semidirect product: inconsistent shapes");
    const Field& F = g.field();
    PreLieAlgebra s(F, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec& p = s.product(i, j);
            const Vec& xy = g.product(i, j);
            Vec h = H.eval_basis({i, j});
            for (std::size_t k = 0; k < n; ++k) p[k] = xy[k];
            for (std::size_t k = 0; k < m; ++k) p[n + k] = h[k];
        }
        for (std::size_t u = 0; u < m; ++u) {
            Vec xu = rep.L(i).column(u);
            Vec ux = rep.R(i).column(u);
            for (std::size_t k = 0; k < m; ++k) {
                s.product(i, n + u)[n + k] = xu[k];
                s.product(n + u, i)[n + k] = ux[k];
            }
        }
    }
    return s;
}

PreLieAlgebra semidirect(const PreLieAlgebra& g, const Representation& rep, const Cochain& H) {
    require_two_cocycle(g, rep, H);
    PreLieAlgebra s = semidirect_product(g, rep, H);
    postcondition(check_prelie(s).pass, "twisted semidirect product is pre-Lie");
    return s;
}

Report check_graph_subalgebra(const ReynoldsData& d) {
    validate_shapes(d);
    std::size_t n = d.dim_g();
    std::size_t m = d.dim_v();
    const Field& F = d.field();
    PreLieAlgebra s = semidirect_product(d.g, d.rep, d.H);
    Matrix graph(F, n + m, m);
    for (std::size_t u = 0; u < m; ++u) {
        Vec Ku = d.K.column(u);
        for (std::size_t k = 0; k < n; ++k) graph.at(k, u) = Ku[k];
        graph.at(n + u, u) = F.one();
    }
    Report r("graph-subalgebra");
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            Vec p = s.mul(graph.column(u), graph.column(v));
            Matrix rhs = Matrix::from_columns(F, {p}, n + m);
            if (solve(graph, rhs)) continue;
            // The V-coordinates fix the only candidate combination; report its defect.
            Vec coeff(p.begin() + static_cast<std::ptrdiff_t>(n), p.end());
            r.fail({u + 1, v + 1}, p - graph.apply(coeff));
        }
    }
    return r;
}

PreLieAlgebra induced_product_raw(const ReynoldsData& d) {
    validate_shapes(d);
    std::size_t m = d.dim_v();
    PreLieAlgebra out(d.field(), m);
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            Vec eu = unit_vec(d.field(), m, u), ev = unit_vec(d.field(), m, v);
            Vec Ku = d.K.column(u), Kv = d.K.column(v);
            out.product(u, v) = d.rep.left(Ku, ev) + d.rep.right(Kv, eu) + d.H.eval({Ku, Kv});
        }
    }
    return out;
}

PreLieAlgebra induced_product(const ReynoldsData& d) {
    require_verified(d);
    PreLieAlgebra out = induced_product_raw(d);
    postcondition(check_prelie(out).pass, "induced product is pre-Lie");
    postcondition(check_morphism(out, d.g, d.K).pass, "K is a morphism (V, ._K) -> (g, .)");
    return out;
}

ShiftIsomorphism shift_isomorphism(const PreLieAlgebra& g, const Representation& rep, const Cochain& H,
                                   const Cochain& h) {
    require_two_cocycle(g, rep, H);
    std::size_t n = g.dim();
    std::size_t m = rep.dim_v();
    if (h.degree() != 1 || h.dim_source() != n || h.dim_target() != m)
        throw ShapeError("h must be a linear map g -> V");
    ShiftIsomorphism out{H + coboundary(g, rep, h), semidirect(g, rep, H), PreLieAlgebra(), Matrix()};
    out.target = semidirect(g, rep, out.shifted_H);
    const Field& F = g.field();
    out.psi = Matrix::identity(F, n + m);
    for (std::size_t x = 0; x < n; ++x) {
        const Vec& hx = h.value(x);
        for (std::size_t k = 0; k < m; ++k) out.psi.at(n + k, x) = -hx[k];
    }
    postcondition(check_morphism(out.source, out.target, out.psi).pass, "Psi_h is a pre-Lie morphism");
    postcondition(inverse(out.psi).has_value(), "Psi_h is invertible");
    return out;
}

LinearMap shift_operator(const ReynoldsData& d, const Cochain& h) {
    require_verified(d);
    if (h.degree() != 1 || h.dim_source() != d.dim_g() || h.dim_target() != d.dim_v())
        throw ShapeError("h must be a linear map g -> V");
    Matrix M = Matrix::identity(d.field(), d.dim_v()) - h.to_map() * d.K;
    auto inv = inverse(M);
    if (!inv) throw Singular("id_V - hK is not invertible");
    LinearMap K2 = d.K * *inv;
    ReynoldsData shifted{d.g, d.rep, d.H + coboundary(d.g, d.rep, h), K2};
    postcondition(is_rcw_reynolds(shifted), "shifted operator is Reynolds for H + dh");
    return K2;
}

LinearMap gauge_transform(const ReynoldsData& d, const Cochain& B) {
    require_verified(d);
    if (B.degree() != 1 || B.dim_source() != d.dim_g() || B.dim_target() != d.dim_v())
        throw ShapeError("B must be a linear map g -> V");
    if (!coboundary(d.g, d.rep, B).is_zero()) throw NotCocycle("B is not a 1-cocycle");
    Matrix M = Matrix::identity(d.field(), d.dim_v()) + B.to_map() * d.K;
    auto inv = inverse(M);
    if (!inv) throw NotAdmissible("id_V + BK is not invertible");
    LinearMap KB = d.K * *inv;
    ReynoldsData gauged = d.with_operator(KB);
    postcondition(is_rcw_reynolds(gauged), "gauge transform is Reynolds for H");
    postcondition(check_morphism(induced_product_raw(d), induced_product_raw(gauged), M).pass,
                  "id_V + BK is a morphism of induced algebras");
    return KB;
}

ReynoldsData reynolds_from_invertible_cochain(const PreLieAlgebra& g, const Representation& rep, const Cochain& h) {
    if (h.degree() != 1 || h.dim_source() != g.dim() || h.dim_target() != rep.dim_v())
        throw ShapeError("h must be a linear map g -> V");
    Matrix hm = h.to_map();
    if (!hm.is_square()) throw Singular("h is not square, hence not invertible");
    auto inv = inverse(hm);
    if (!inv) throw Singular("h is not invertible");
    ReynoldsData d{g, rep, g.field().from_int(-1) * coboundary(g, rep, h), *inv};
    postcondition(check_two_cocycle(g, rep, d.H).pass, "-dh is a 2-cocycle");
    postcondition(is_rcw_reynolds(d), "h^{-1} is Reynolds for -dh");
    return d;
}

Report check_rcw_morphism(const ReynoldsData& a, const ReynoldsData& b, const LinearMap& phi, const LinearMap& psi) {
    validate_shapes(a);
    validate_shapes(b);
    if (phi.rows() != b.dim_g() || phi.cols() != a.dim_g()) throw ShapeError("phi must map g -> g'");
    if (psi.rows() != b.dim_v() || psi.cols() != a.dim_v()) throw ShapeError("psi must map V -> V'");
    Report op("operator"), left("left"), right("right"), coc("cocycle");
    Matrix diff = phi * a.K - b.K * psi;
    for (std::size_t u = 0; u < a.dim_v(); ++u) op.expect_zero({u}, diff.column(u));
    for (std::size_t x = 0; x < a.dim_g(); ++x) {
        Vec px = phi.column(x);
        Matrix l = psi * a.rep.L(x) - b.rep.left_matrix(px) * psi;
        Matrix r = psi * a.rep.R(x) - b.rep.right_matrix(px) * psi;
        for (std::size_t u = 0; u < a.dim_v(); ++u) {
            left.expect_zero({x, u}, l.column(u));
            right.expect_zero({x, u}, r.column(u));
        }
        for (std::size_t y = 0; y < a.dim_g(); ++y)
            coc.expect_zero({x, y}, psi.apply(a.H.eval_basis({x, y})) - b.H.eval({px, phi.column(y)}));
    }
    Report out("rcw-morphism");
    out.add_part(check_morphism(a.g, b.g, phi));
    out.add_part(std::move(op));
    out.add_part(std::move(left));
    out.add_part(std::move(right));
    out.add_part(std::move(coc));
    return out;
}

}  // namespace prelie
