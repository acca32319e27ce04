#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prelie/brackets.hpp"
#include "prelie/cochain.hpp"
#include "prelie/generators.hpp"
#include "prelie/reynolds.hpp"

namespace prelie::testing {

// Naive multilinear evaluation helpers. They only use the algebra and
// representation tables and never call the library's cochain machinery
// except to read values of the input cochain.

inline Vec naive_mul(const PreLieAlgebra& a, const Vec& x, const Vec& y) {
    const Field& f = a.field();
    Vec out = zero_vec(f, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (x[i].is_zero() || y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < a.dim(); ++k) out[k] += c * a.product(i, j)[k];
        }
    return out;
}

inline Vec naive_act(const std::vector<Matrix>& side, const Vec& x, const Vec& u) {
    const Field& f = side.empty() ? Field::rationals() : side[0].field();
    std::size_t m = u.size();
    Vec out = zero_vec(f, m);
    for (std::size_t i = 0; i < side.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c) out[r] += x[i] * side[i].at(r, c) * u[c];
    }
    return out;
}

inline std::vector<Matrix> left_side(const Representation& rep) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < rep.dim_g(); ++i) out.push_back(rep.L(i));
    return out;
}

inline std::vector<Matrix> right_side(const Representation& rep) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < rep.dim_g(); ++i) out.push_back(rep.R(i));
    return out;
}

inline Vec mat_apply(const Matrix& m, const Vec& x) {
    Vec out = zero_vec(m.field(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m.at(r, c) * x[c];
    return out;
}

inline Vec basis(const Field& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = f.one();
    return v;
}

// A multilinear map given by a function of its arguments.
using Multi = std::function<Vec(const std::vector<Vec>&)>;

// Textbook coboundary of f in Hom(X^{(x) n}, Y) for an algebra X with
// actions L, R on Y:
// sum_i (-1)^{i+1} L_{x_i} f(..^i..) + sum_i (-1)^{i+1} R_{x_{n+1}} f(..^i.., x_i)
// - sum_i (-1)^{i+1} f(..^i.., x_i x_{n+1}) + sum_{i<j<=n} (-1)^{i+j} f([x_i,x_j], ..^i..^j..).
struct Action {
    std::function<Vec(const Vec&, const Vec&)> mul;   // X x X -> X
    std::function<Vec(const Vec&, const Vec&)> left;  // X x Y -> Y
    std::function<Vec(const Vec&, const Vec&)> right; // X x Y -> Y
};

inline Vec naive_coboundary(const Action& a, const Multi& f, const std::vector<Vec>& x) {
    std::size_t n = x.size() - 1;
    auto without = [&](std::size_t skip, std::size_t upto) {
        std::vector<Vec> out;
        for (std::size_t k = 0; k < upto; ++k)
            if (k != skip) out.push_back(x[k]);
        return out;
    };
    Vec out;
    auto add = [&](const Vec& v, int sign) {
        if (out.empty()) out = zero_vec(v.empty() ? Field::rationals() : v[0].field(), v.size());
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (sign > 0) out[k] += v[k];
            else out[k] -= v[k];
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        int s = (i % 2 == 0) ? 1 : -1;
        add(a.left(x[i], f(without(i, n + 1))), s);
        std::vector<Vec> args = without(i, n);
        args.push_back(x[i]);
        add(a.right(x[n], f(args)), s);
        std::vector<Vec> args2 = without(i, n);
        args2.push_back(a.mul(x[i], x[n]));
        add(f(args2), -s);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int s = ((i + j) % 2 == 0) ? 1 : -1;
            Vec br = a.mul(x[i], x[j]) - a.mul(x[j], x[i]);
            std::vector<Vec> args{br};
            for (std::size_t k = 0; k <= n; ++k)
                if (k != i && k != j) args.push_back(x[k]);
            add(f(args), s);
        }
    return out;
}

inline Action algebra_action(const PreLieAlgebra& g, const Representation& rep) {
    auto L = left_side(rep), R = right_side(rep);
    return Action{[g](const Vec& x, const Vec& y) { return naive_mul(g, x, y); },
                  [L](const Vec& x, const Vec& u) { return naive_act(L, x, u); },
                  [R](const Vec& x, const Vec& u) { return naive_act(R, x, u); }};
}

// (V, ._K) acting on g by
// Lbar_u x = Ku.x - K(R_x u) - K H(Ku, x), Rbar_u x = x.Ku - K(L_x u) - K H(x, Ku).
inline Action operator_action(const ReynoldsData& d) {
    auto L = left_side(d.rep), R = right_side(d.rep);
    Cochain H = d.H;
    Matrix K = d.K;
    PreLieAlgebra g = d.g;
    auto Hf = [H](const Vec& x, const Vec& y) { return H.eval({x, y}); };
    auto mulK = [=](const Vec& u, const Vec& v) {
        Vec Ku = mat_apply(K, u), Kv = mat_apply(K, v);
        return naive_act(L, Ku, v) + naive_act(R, Kv, u) + Hf(Ku, Kv);
    };
    auto lbar = [=](const Vec& u, const Vec& x) {
        Vec Ku = mat_apply(K, u);
        return naive_mul(g, Ku, x) - mat_apply(K, naive_act(R, x, u)) - mat_apply(K, Hf(Ku, x));
    };
    auto rbar = [=](const Vec& u, const Vec& x) {
        Vec Ku = mat_apply(K, u);
        return naive_mul(g, x, Ku) - mat_apply(K, naive_act(L, x, u)) - mat_apply(K, Hf(x, Ku));
    };
    return Action{mulK, lbar, rbar};
}

// All basis tuples (with repetition) of the given length.
inline std::vector<std::vector<std::size_t>> basis_tuples(std::size_t dim, std::size_t len) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(len, 0);
    if (dim == 0) return out;
    while (true) {
        out.push_back(t);
        std::size_t k = len;
        while (k > 0) {
            if (++t[k - 1] < dim) break;
            t[k - 1] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

inline std::vector<Vec> basis_args(const Field& f, std::size_t dim, const std::vector<std::size_t>& t) {
    std::vector<Vec> out;
    for (auto i : t) out.push_back(basis(f, dim, i));
    return out;
}

// Naive RCW residual Ku.Kv - K(L_{Ku} v + R_{Kv} u + H(Ku, Kv)).
inline Vec naive_rcw(const ReynoldsData& d, const Vec& u, const Vec& v) {
    Vec Ku = mat_apply(d.K, u), Kv = mat_apply(d.K, v);
    Vec inner = naive_act(left_side(d.rep), Ku, v) + naive_act(right_side(d.rep), Kv, u) + d.H.eval({Ku, Kv});
    return naive_mul(d.g, Ku, Kv) - mat_apply(d.K, inner);
}

inline bool naive_is_rcw(const ReynoldsData& d) {
    const Field& f = d.field();
    for (std::size_t i = 0; i < d.dim_v(); ++i)
        for (std::size_t j = 0; j < d.dim_v(); ++j)
            if (!is_zero(naive_rcw(d, basis(f, d.dim_v(), i), basis(f, d.dim_v(), j)))) return false;
    return true;
}

// Random verified instance: a pre-Lie algebra of dim 1..3, a representation
// and a cocycle H with an operator K. Cycles through three families:
// invertible K from a random cochain, K = 0 with a coboundary cocycle, and
// the g3 family with a random third-row-zero operator.
inline ReynoldsData random_instance(const Field& f, Rng& rng, std::size_t seed_kind) {
    std::uniform_int_distribution<std::size_t> dimd(1, 3);
    switch (seed_kind % 3) {
        case 0: {
            std::size_t n = dimd(rng);
            PreLieAlgebra g = random_prelie(f, n, rng);
            Representation rep = (rng() % 2) ? regular_representation(g) : random_representation(g, n, rng);
            return random_reynolds(g, rep, rng);
        }
        case 1: {
            std::size_t n = dimd(rng), m = dimd(rng);
            PreLieAlgebra g = random_prelie(f, n, rng);
            Representation rep = random_representation(g, m, rng);
            Cochain H = coboundary(g, rep, random_cochain(f, 1, n, m, rng));
            return ReynoldsData{g, rep, H, Matrix(f, n, m)};
        }
        default: {
            Matrix K = random_matrix(f, 3, 3, rng);
            for (std::size_t c = 0; c < 3; ++c) K.at(2, c) = f.zero();
            return g3_data(f, K);
        }
    }
}

}  // namespace prelie::testing
