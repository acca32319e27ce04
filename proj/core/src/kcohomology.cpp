#include "prelie/kcohomology.hpp"

#include <cstdio>
#include <stdexcept>

#include "prelie/errors.hpp"

namespace prelie {

namespace {

void require_data(const ReynoldsData& d) {
    validate_shapes(d);
    if (!is_rcw_reynolds(d)) throw UnverifiedOperator("K fails the RCW Reynolds identity");
}

void check_cochain_shape(const ReynoldsData& d, const Cochain& f) {
    if (f.dim_source() != d.dim_v() || f.dim_target() != d.dim_g())
        throw ShapeError("cochain must map V -> g for the operator cohomology");
}

}  // namespace

Representation induced_representation_raw(const ReynoldsData& d) {
    validate_shapes(d);
    std::size_t n = d.dim_g();
    std::size_t m = d.dim_v();
    const Field& F = d.field();
    std::vector<Matrix> L, R;
    for (std::size_t u = 0; u < m; ++u) {
        Vec eu = unit_vec(F, m, u);
        Vec Ku = d.K.column(u);
        Matrix l(F, n, n), r(F, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = unit_vec(F, n, j);
            l.set_column(j, d.g.mul(Ku, x) - d.K.apply(d.rep.R(j).apply(eu)) - d.K.apply(d.H.eval({Ku, x})));
            r.set_column(j, d.g.mul(x, Ku) - d.K.apply(d.rep.L(j).apply(eu)) - d.K.apply(d.H.eval({x, Ku})));
        }
        L.push_back(std::move(l));
        R.push_back(std::move(r));
    }
    if (m == 0) return Representation(F, 0, n);
    return Representation(std::move(L), std::move(R));
}

Representation induced_representation(const ReynoldsData& d) {
    require_data(d);
    Representation rep = induced_representation_raw(d);
    if (!check_representation(induced_product_raw(d), rep))
        throw std::logic_error("postcondition failed: induced representation");
    return rep;
}

Cochain coboundary_K_unchecked(const ReynoldsData& d, const Cochain& f) {
    check_cochain_shape(d, f);
    return coboundary(induced_product_raw(d), induced_representation_raw(d), f);
}

Cochain coboundary_K(const ReynoldsData& d, const Cochain& f) {
    require_data(d);
    return coboundary_K_unchecked(d, f);
}

Matrix coboundary_K_matrix(const ReynoldsData& d, std::size_t degree) {
    require_data(d);
    return coboundary_matrix(induced_product_raw(d), induced_representation_raw(d), degree);
}

LinearMap coboundary_K_degree0(const ReynoldsData& d, const Vec& x) {
    validate_shapes(d);
    std::size_t m = d.dim_v();
    const Field& F = d.field();
    Matrix out(F, d.dim_g(), m);
    for (std::size_t u = 0; u < m; ++u) {
        Vec eu = unit_vec(F, m, u);
        Vec Ku = d.K.column(u);
        Vec inner = d.rep.left(x, eu) - d.rep.right(x, eu) + d.H.eval({x, Ku});
        out.set_column(u, d.K.apply(inner) - d.g.mul(x, Ku) + d.g.mul(Ku, x));
    }
    return out;
}

std::string operator_hash(const LinearMap& K) {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    feed(K.field().name());
    feed(std::to_string(K.rows()) + "x" + std::to_string(K.cols()));
    for (std::size_t r = 0; r < K.rows(); ++r)
        for (std::size_t c = 0; c < K.cols(); ++c) feed(K.at(r, c).to_string());
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

KCohomologyReport cohomology_K(const ReynoldsData& d, std::size_t degree) {
    require_data(d);
    return {cohomology(induced_product_raw(d), induced_representation_raw(d), degree), operator_hash(d.K)};
}

ExplicitExpansion coboundary_K_explicit(const ReynoldsData& d, const Cochain& f, Reading reading) {
    validate_shapes(d);
    check_cochain_shape(d, f);
    const Field& F = d.field();
    std::size_t m = d.dim_v();
    std::size_t gdim = d.dim_g();
    std::size_t n = f.degree();
    bool printed = reading == Reading::Printed;
    auto sgn = [&F](std::size_t e) { return F.from_int(e % 2 == 0 ? 1 : -1); };
    auto e = [&](std::size_t i) { return unit_vec(F, m, i); };
    auto K = [&](const Vec& v) { return d.K.apply(v); };
    // u ._K v
    auto kprod = [&](const Vec& u, const Vec& v) {
        Vec Ku = K(u), Kv = K(v);
        return d.rep.left(Ku, v) + d.rep.right(Kv, u) + d.H.eval({Ku, Kv});
    };

    ExplicitExpansion out;
    for (int k = 0; k < 8; ++k) out.groups.emplace_back(F, n + 1, m, gdim);
    Cochain shape(F, n + 1, m, gdim);
    for (std::size_t s = 0; s < shape.slot_count(); ++s) {
        std::vector<std::size_t> u = shape.tuple(s / m);
        u.push_back(s % m);  // u[0..n]; 1-based index i corresponds to u[i-1]
        std::vector<Vec> acc(8, zero_vec(F, gdim));
        auto without = [&](std::size_t skip1, std::size_t skip2, std::size_t upto) {
            std::vector<std::size_t> r;
            for (std::size_t k = 0; k < upto; ++k)
                if (k != skip1 && k != skip2) r.push_back(u[k]);
            return r;
        };
        const std::size_t none = static_cast<std::size_t>(-1);
        Vec Klast = d.K.column(u[n]);
        for (std::size_t i = 1; i <= n; ++i) {
            Scalar si = sgn(i + 1);
            Vec Kui = d.K.column(u[i - 1]);
            Vec fi = f.eval_basis(without(i - 1, none, n + 1));
            axpy(acc[0], si, d.g.mul(Kui, fi));
            axpy(acc[1], -si, K(d.rep.right(fi, e(u[i - 1]))));
            axpy(acc[2], -si, K(d.H.eval({Kui, fi})));

            std::vector<std::size_t> moved = without(i - 1, none, n);
            moved.push_back(u[i - 1]);
            Vec fm = f.eval_basis(moved);
            if (printed) {
                axpy(acc[5], sgn(n), K(d.H.eval({fm, Klast})));
            } else {
                axpy(acc[3], si, d.g.mul(fm, Klast));
                axpy(acc[4], -si, K(d.rep.left(fm, e(u[n]))));
                axpy(acc[5], -si, K(d.H.eval({fm, Klast})));
            }

            Vec X = d.rep.left(Kui, e(u[n])) + d.H.eval({Kui, Klast});
            X = X + (printed ? d.rep.left(Klast, e(u[i - 1])) : d.rep.right(Klast, e(u[i - 1])));
            std::vector<Vec> args;
            for (auto k : without(i - 1, none, n)) args.push_back(e(k));
            args.push_back(X);
            f.accumulate(args, -si, acc[6]);
        }
        if (printed) {
            std::vector<std::size_t> head(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
            Vec fh = f.eval_basis(head);
            axpy(acc[3], sgn(n + 1), d.g.mul(fh, Klast));
            axpy(acc[4], sgn(n), K(d.rep.left(fh, e(u[n]))));
        }
        std::size_t jmax = printed ? n + 1 : n;
        for (std::size_t i = 1; i <= jmax; ++i) {
            for (std::size_t j = i + 1; j <= jmax; ++j) {
                Scalar sij = printed ? sgn(i) : sgn(i + j);
                Vec br = kprod(e(u[i - 1]), e(u[j - 1])) - kprod(e(u[j - 1]), e(u[i - 1]));
                std::vector<Vec> args{br};
                for (auto k : without(i - 1, j - 1, n + 1)) args.push_back(e(k));
                f.accumulate(args, sij, acc[7]);
            }
        }
        for (int k = 0; k < 8; ++k) out.groups[k].value(s) = std::move(acc[k]);
    }
    out.total = Cochain(F, n + 1, m, gdim);
    for (const auto& g : out.groups) out.total += g;
    return out;
}

ExplicitComparison compare_explicit_coboundary_K(const ReynoldsData& d, const Cochain& f) {
    Cochain generic = coboundary_K(d, f);
    ExplicitExpansion printed = coboundary_K_explicit(d, f, Reading::Printed);
    ExplicitExpansion amended = coboundary_K_explicit(d, f, Reading::Amended);
    ExplicitComparison c;
    c.printed_matches = printed.total == generic;
    c.amended_matches = amended.total == generic;
    for (std::size_t k = 0; k < printed.groups.size(); ++k)
        if (printed.groups[k] != amended.groups[k]) c.differing_groups.push_back(k + 1);
    return c;
}

}  // namespace prelie
