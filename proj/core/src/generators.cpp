#include "prelie/generators.hpp"

#include "prelie/errors.hpp"

namespace prelie {

Scalar random_scalar(const Field& f, Rng& rng, long long lo, long long hi) {
    std::uniform_int_distribution<long long> dist(lo, hi);
    return f.from_int(dist(rng));
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_scalar(f, rng);
    return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
    while (true) {
        Matrix m = random_matrix(f, n, n, rng);
        if (rank(m) == n) return m;
    }
}

Cochain random_cochain(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target, Rng& rng) {
    Cochain c(f, degree, dim_source, dim_target);
    for (std::size_t s = 0; s < c.slot_count(); ++s)
        for (auto& x : c.value(s)) x = random_scalar(f, rng);
    return c;
}

PreLieAlgebra random_product(const Field& f, std::size_t dim, std::size_t max_terms, Rng& rng) {
    PreLieAlgebra a(f, dim);
    if (dim == 0) return a;
    std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, max_terms));
    std::size_t terms = count(rng);
    for (std::size_t t = 0; t < terms; ++t) a.set(idx(rng), idx(rng), idx(rng), random_scalar(f, rng));
    return a;
}

PreLieAlgebra random_prelie(const Field& f, std::size_t dim, Rng& rng, std::size_t attempts) {
    for (std::size_t k = 0; k < attempts; ++k) {
        PreLieAlgebra a = random_product(f, dim, dim + 1, rng);
        if (!a.is_zero() && check_prelie(a)) return a;
    }
    return PreLieAlgebra(f, dim);
}

Representation random_representation(const PreLieAlgebra& g, std::size_t dim_v, Rng& rng, std::size_t attempts) {
    const Field& f = g.field();
    std::size_t n = g.dim();
    if (n == 0 || dim_v == 0) return Representation(f, n, dim_v);
    std::uniform_int_distribution<std::size_t> gi(0, n - 1), vi(0, dim_v - 1), coin(0, 1);
    for (std::size_t k = 0; k < attempts; ++k) {
        std::vector<Matrix> L(n, Matrix(f, dim_v, dim_v)), R(n, Matrix(f, dim_v, dim_v));
        std::size_t terms = 1 + k % (dim_v + 1);
        for (std::size_t t = 0; t < terms; ++t) {
            auto& side = coin(rng) ? L : R;
            side[gi(rng)].at(vi(rng), vi(rng)) = random_scalar(f, rng);
        }
        Representation rep(std::move(L), std::move(R));
        if (check_representation(g, rep)) return rep;
    }
    return Representation(f, n, dim_v);
}

ReynoldsData random_reynolds(const PreLieAlgebra& g, const Representation& rep, Rng& rng) {
    if (g.dim() != rep.dim_v()) throw DimensionMismatch("random_reynolds needs dim g == dim V");
    Matrix h = random_invertible(g.field(), g.dim(), rng);
    return reynolds_from_invertible_cochain(g, rep, Cochain::from_map(h));
}

PreLieAlgebra g3_algebra(const Field& f) {
    PreLieAlgebra a(f, 3);
    a.set(2, 2, 1, f.one());
    return a;
}

Cochain g3_cocycle(const Field& f) {
    Cochain H(f, 2, 3, 3);
    H.set({2}, 2, unit_vec(f, 3, 2));
    return H;
}

ReynoldsData g3_data(const Field& f, const LinearMap& K) {
    PreLieAlgebra g = g3_algebra(f);
    Representation rep = regular_representation(g);
    return ReynoldsData{g, rep, g3_cocycle(f), K};
}

}  // namespace prelie
