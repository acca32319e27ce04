#pragma once

#include <cstddef>
#include <random>

#include "prelie/algebra.hpp"
#include "prelie/cochain.hpp"
#include "prelie/matrix.hpp"
#include "prelie/reynolds.hpp"

namespace prelie {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] mapped into the field.
Scalar random_scalar(const Field& f, Rng& rng, long long lo = -2, long long hi = 2);
Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);
Cochain random_cochain(const Field& f, std::size_t degree, std::size_t dim_source, std::size_t dim_target, Rng& rng);
// Random bilinear product with at most max_terms nonzero structure constants.
PreLieAlgebra random_product(const Field& f, std::size_t dim, std::size_t max_terms, Rng& rng);

// Sparse random pre-Lie algebra by rejection. Falls back to the zero
// algebra if no sample passes within the attempt limit.
PreLieAlgebra random_prelie(const Field& f, std::size_t dim, Rng& rng, std::size_t attempts = 20000);
// Sparse random representation by rejection; falls back to the zero
// representation if no sample passes within the attempt limit.
Representation random_representation(const PreLieAlgebra& g, std::size_t dim_v, Rng& rng,
                                      std::size_t attempts = 20000);
// K = h^{-1}, H = -coboundary(h) for a random invertible h: g -> V.
// Requires dim g == dim V.
ReynoldsData random_reynolds(const PreLieAlgebra& g, const Representation& rep, Rng& rng);

// The three-dimensional algebra with e3.e3 = e2 and zero products otherwise.
PreLieAlgebra g3_algebra(const Field& f);
// H(e3, e3) = e3 on g3 with values in the regular representation.
Cochain g3_cocycle(const Field& f);
// g3 data with the given operator.
ReynoldsData g3_data(const Field& f, const LinearMap& K);

}  // namespace prelie
