#include <gtest/gtest.h>

#include "prelie/errors.hpp"
#include "prelie/reynolds.hpp"
#include "support.hpp"

using namespace prelie;
using namespace prelie::testing;

namespace {

// Componentwise form of the identity for g3 with K e_j = sum_i a_ij e_i:
// [k = 2] a_3i a_3j = (d_j3 a_3i + d_i3 a_3j) a_k2 + a_3i a_3j a_k3.
bool g3_componentwise(const Matrix& a) {
    const Field& f = a.field();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                Scalar lhs = k == 1 ? a.at(2, i) * a.at(2, j) : f.zero();
                Scalar coeff = f.zero();
                if (j == 2) coeff += a.at(2, i);
                if (i == 2) coeff += a.at(2, j);
                Scalar rhs = coeff * a.at(k, 1) + a.at(2, i) * a.at(2, j) * a.at(k, 2);
                if (lhs != rhs) return false;
            }
    return true;
}

Matrix from_bits(const Field& f, unsigned bits, std::size_t rows, std::size_t cols) {
    Matrix m(f, rows, cols);
    for (std::size_t b = 0; b < rows * cols; ++b)
        if (bits >> b & 1u) m.at(b / cols, b % cols) = f.one();
    return m;
}

// Random 1-cocycle g -> V from the kernel of the degree-1 coboundary matrix.
Cochain random_one_cocycle(const ReynoldsData& d, Rng& rng) {
    const Field& f = d.field();
    KernelBasis k = kernel(coboundary_matrix(d.g, d.rep, 1));
    Vec flat = zero_vec(f, d.dim_g() * d.dim_v());
    for (const auto& b : k.basis) axpy(flat, random_scalar(f, rng, -1, 1), b);
    return Cochain::unflatten(f, 1, d.dim_g(), d.dim_v(), flat);
}

bool nilpotent(const Matrix& m) {
    Matrix p = m;
    for (std::size_t i = 1; i < m.rows(); ++i) p = p * m;
    return p.is_zero();
}

}  // namespace

TEST(Reynolds, G3ThirdRowZeroFamilyPasses) {
    Rng rng(21);
    Field q = Field::rationals();
    for (int t = 0; t < 50; ++t) {
        Matrix K = random_matrix(q, 3, 3, rng);
        for (std::size_t c = 0; c < 3; ++c) K.at(2, c) = q.zero();
        EXPECT_TRUE(check_rcw_reynolds(g3_data(q, K)).pass);
    }
}

TEST(Reynolds, G3ExhaustiveOverF2MatchesComponentwiseIdentity) {
    Field f = Field::prime(2);
    std::size_t solutions = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
        Matrix K = from_bits(f, bits, 3, 3);
        bool lib = check_rcw_reynolds(g3_data(f, K)).pass;
        ASSERT_EQ(lib, g3_componentwise(K)) << bits;
        ASSERT_EQ(lib, naive_is_rcw(g3_data(f, K))) << bits;
        solutions += lib;
    }
    EXPECT_GE(solutions, 64u);
}

TEST(Reynolds, NonzeroThirdRowEntryFailsOverQ) {
    Field q = Field::rationals();
    Matrix K(q, 3, 3);
    K.at(2, 0) = q.one();
    Report r = check_rcw_reynolds(g3_data(q, K));
    EXPECT_FALSE(r.pass);
    ASSERT_FALSE(r.violations.empty());
    EXPECT_EQ(r.violations.front().at, (std::vector<std::size_t>{1, 1}));
}

TEST(Reynolds, GraphSubalgebraAgreesWithIdentity) {
    Rng rng(22);
    Field f = Field::prime(3);
    for (int t = 0; t < 60; ++t) {
        ReynoldsData d = random_instance(f, rng, t);
        ReynoldsData e = d.with_operator(random_matrix(f, d.dim_g(), d.dim_v(), rng));
        EXPECT_TRUE(check_graph_subalgebra(d).pass);
        EXPECT_EQ(check_graph_subalgebra(e).pass, naive_is_rcw(e));
    }
}

TEST(Reynolds, ShapeMismatchIsRejected) {
    Field q = Field::rationals();
    EXPECT_THROW(check_rcw_reynolds(g3_data(q, Matrix(q, 2, 3))), ShapeError);
}

TEST(Weighted, OneDimensionalOracle) {
    // e1.e1 = e1, K = k: the identity reads k^2 = k(2k + lambda k^2).
    Field q = Field::rationals();
    PreLieAlgebra g(q, 1);
    g.set(0, 0, 0, q.one());
    for (int k = -3; k <= 3; ++k)
        for (int l = -2; l <= 2; ++l) {
            Scalar ks = q.from_int(k), ls = q.from_int(l);
            bool expected = ks * ks == ks * (q.from_int(2) * ks + ls * ks * ks);
            Matrix K = Matrix::from_rows(q, {{ks}}, 1);
            EXPECT_EQ(check_weighted_reynolds(g, K, ls).pass, expected) << k << " " << l;
        }
}

TEST(Weighted, DerivationRoundTrip) {
    Field q = Field::rationals();
    PreLieAlgebra g(q, 1);
    g.set(0, 0, 0, q.one());
    Matrix K = Matrix::from_rows(q, {{q.from_int(-1)}}, 1);
    Scalar one = q.one();
    Matrix D = derivation_from_reynolds(g, K, one);
    EXPECT_TRUE(check_derivation(g, D).pass);
    EXPECT_EQ(reynolds_from_derivation(g, D, one), K);
}

TEST(Weighted, StarProductIsPreLie) {
    Field q = Field::rationals();
    PreLieAlgebra g(q, 1);
    g.set(0, 0, 0, q.one());
    Matrix K = Matrix::from_rows(q, {{q.from_int(-1)}}, 1);
    PreLieAlgebra s = star_product(g, K, q.one());
    EXPECT_TRUE(check_prelie(s).pass);
    EXPECT_TRUE(check_weighted_reynolds(s, K, q.one()).pass);
    EXPECT_THROW(star_product(g, Matrix::from_rows(q, {{q.from_int(2)}}, 1), q.one()), UnverifiedOperator);
}

TEST(DReynolds, OneDimensionalOracle) {
    // Unital e1.e1 = e1, D = d, K = k: k^2 = k(2k - k d k).
    Field q = Field::rationals();
    PreLieAlgebra g(q, 1);
    g.set(0, 0, 0, q.one());
    g.set_unit({q.one()});
    for (int k = -2; k <= 2; ++k)
        for (int dd = -2; dd <= 2; ++dd) {
            Scalar ks = q.from_int(k), ds = q.from_int(dd);
            bool expected = ks * ks == ks * (q.from_int(2) * ks - ks * ds * ks);
            EXPECT_EQ(check_d_reynolds(g, Matrix::from_rows(q, {{ds}}, 1), Matrix::from_rows(q, {{ks}}, 1)).pass,
                      expected);
        }
    PreLieAlgebra nounit(q, 1);
    EXPECT_THROW(check_d_reynolds(nounit, Matrix(q, 1, 1), Matrix(q, 1, 1)), NoUnit);
}

TEST(Constructions, ShiftIsomorphismOnG3) {
    Field q = Field::rationals();
    PreLieAlgebra g = g3_algebra(q);
    Representation rep = regular_representation(g);
    Cochain h(q, 1, 3, 3);
    h.set({}, 2, unit_vec(q, 3, 2));  // h(e3) = e3
    ShiftIsomorphism s = shift_isomorphism(g, rep, g3_cocycle(q), h);
    Vec expected = unit_vec(q, 3, 2);
    expected[1] = q.from_int(2);
    EXPECT_EQ(s.shifted_H.eval_basis({2, 2}), expected);
    EXPECT_TRUE(check_morphism(s.source, s.target, s.psi).pass);
}

TEST(Constructions, RandomDataPassPostconditions) {
    Rng rng(23);
    Field q = Field::rationals();
    std::size_t gauged = 0;
    for (int t = 0; t < 60; ++t) {
        ReynoldsData d = random_instance(q, rng, t);
        EXPECT_TRUE(check_prelie(semidirect(d.g, d.rep, d.H)).pass);
        EXPECT_TRUE(check_prelie(induced_product(d)).pass);
        Cochain h = random_cochain(q, 1, d.dim_g(), d.dim_v(), rng);
        try {
            LinearMap K2 = shift_operator(d, h);
            EXPECT_TRUE(naive_is_rcw(ReynoldsData{d.g, d.rep, d.H + coboundary(d.g, d.rep, h), K2}));
        } catch (const Singular&) {
        }
        for (int attempt = 0; attempt < 10; ++attempt) {
            Cochain B = random_one_cocycle(d, rng);
            if (!nilpotent(B.to_map() * d.K)) continue;
            LinearMap KB = gauge_transform(d, B);
            EXPECT_TRUE(naive_is_rcw(d.with_operator(KB)));
            gauged += !(B.to_map() * d.K).is_zero();
            break;
        }
    }
    EXPECT_GT(gauged, 0u);
}

TEST(Constructions, ReynoldsFromInvertibleCochain) {
    Rng rng(24);
    Field q = Field::rationals();
    for (int t = 0; t < 20; ++t) {
        PreLieAlgebra g = random_prelie(q, 1 + t % 3, rng);
        Matrix hm = random_invertible(q, g.dim(), rng);
        ReynoldsData d = reynolds_from_invertible_cochain(g, regular_representation(g), Cochain::from_map(hm));
        EXPECT_EQ(d.K * hm, Matrix::identity(q, g.dim()));
        EXPECT_TRUE(naive_is_rcw(d));
    }
    PreLieAlgebra g = g3_algebra(q);
    EXPECT_THROW(reynolds_from_invertible_cochain(g, regular_representation(g), Cochain(q, 1, 3, 3)), Singular);
}

TEST(Constructions, GaugeRejectsNonCocycle) {
    Field q = Field::rationals();
    Matrix K(q, 3, 3);
    K.at(0, 0) = q.one();
    ReynoldsData d = g3_data(q, K);
    Cochain B(q, 1, 3, 3);
    B.set({}, 2, unit_vec(q, 3, 2));  // e3 -> e3 is not a derivation
    EXPECT_THROW(gauge_transform(d, B), NotCocycle);
}

TEST(Morphism, IdentityIsAMorphism) {
    Field q = Field::rationals();
    Matrix K(q, 3, 3);
    K.at(0, 1) = q.one();
    ReynoldsData d = g3_data(q, K);
    Matrix id = Matrix::identity(q, 3);
    EXPECT_TRUE(check_rcw_morphism(d, d, id, id).pass);
    Matrix twice = q.from_int(2) * id;
    EXPECT_FALSE(check_rcw_morphism(d, d, twice, id).pass);
}
