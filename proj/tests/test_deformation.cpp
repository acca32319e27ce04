#include <gtest/gtest.h>

#include "prelie/deformation.hpp"
#include "prelie/errors.hpp"
#include "prelie/kcohomology.hpp"
#include "support.hpp"

using namespace prelie;
using namespace prelie::testing;

namespace {

const Report& part(const Report& r, const std::string& name) {
    for (const auto& p : r.parts)
        if (p.name == name) return p;
    throw std::out_of_range("no part " + name);
}

std::string detail(const Report& r, const std::string& key) {
    for (const auto& [k, v] : r.details)
        if (k == key) return v;
    return {};
}

Matrix random_cocycle(const ReynoldsData& d, Rng& rng) {
    const Field& f = d.field();
    KernelBasis k = kernel(coboundary_K_matrix(d, 1));
    Vec flat = zero_vec(f, d.dim_g() * d.dim_v());
    for (const auto& b : k.basis) axpy(flat, random_scalar(f, rng), b);
    return Cochain::unflatten(f, 1, d.dim_v(), d.dim_g(), flat).to_map();
}

ReynoldsData e11_g3(const Field& f) {
    Matrix K(f, 3, 3);
    K.at(0, 0) = f.one();
    return g3_data(f, K);
}

ReynoldsData dim1(const Field& f) {
    PreLieAlgebra g(f, 1);
    g.set(0, 0, 0, f.one());
    return ReynoldsData{g, regular_representation(g), Cochain(f, 2, 1, 1), Matrix(f, 1, 1)};
}

}  // namespace

TEST(LinearDeformation, CocyclesPassFirstOrder) {
    Rng rng(51);
    Field q = Field::rationals();
    for (int t = 0; t < 40; ++t) {
        ReynoldsData d = random_instance(q, rng, t);
        Matrix K1 = random_cocycle(d, rng);
        Report r = check_linear_deformation(d, K1);
        EXPECT_TRUE(part(r, "t1").pass);
        EXPECT_EQ(detail(r, "cocycle"), "true");
    }
}

TEST(LinearDeformation, NonCocyclesFailFirstOrder) {
    Rng rng(52);
    Field q = Field::rationals();
    std::size_t tested = 0;
    for (int t = 0; t < 60; ++t) {
        PreLieAlgebra g = random_prelie(q, 2 + t % 2, rng);
        ReynoldsData d = random_reynolds(g, regular_representation(g), rng);
        Matrix K1 = random_matrix(q, d.dim_g(), d.dim_v(), rng);
        if (coboundary_K(d, Cochain::from_map(K1)).is_zero()) continue;
        ++tested;
        Report r = check_linear_deformation(d, K1);
        EXPECT_FALSE(part(r, "t1").pass);
        EXPECT_FALSE(r.pass);
    }
    EXPECT_GT(tested, 20u);
}

TEST(LinearDeformation, WholeLineIsAFamilyOfOperators) {
    Rng rng(53);
    Field q = Field::rationals();
    for (int t = 0; t < 20; ++t) {
        ReynoldsData d = random_instance(q, rng, t);
        Matrix K1 = random_matrix(q, d.dim_g(), d.dim_v(), rng);
        bool all_orders = check_linear_deformation(d, K1).pass;
        bool line = true;
        for (int s = -3; s <= 3; ++s) line = line && naive_is_rcw(d.with_operator(d.K + q.from_int(s) * K1));
        EXPECT_EQ(all_orders, line);
    }
}

TEST(FormalDeformation, OrderOneMatchesLinearDeformation) {
    Rng rng(54);
    Field q = Field::rationals();
    for (int t = 0; t < 20; ++t) {
        ReynoldsData d = random_instance(q, rng, t);
        Matrix K1 = (t % 2) ? random_cocycle(d, rng) : random_matrix(q, d.dim_g(), d.dim_v(), rng);
        Report r = check_formal_deformation(DeformationSeries{d, {K1}});
        EXPECT_EQ(r.pass, check_linear_deformation(d, K1).pass);
        EXPECT_EQ(detail(r, "orders"), "0..3");
    }
}

TEST(FormalDeformation, InfinitesimalIsACocycle) {
    Field q = Field::rationals();
    ReynoldsData d = e11_g3(q);
    Matrix K1(q, 3, 3), K2(q, 3, 3);
    K1.at(0, 1) = q.one();
    K1.at(1, 0) = q.one();
    K2.at(0, 2) = q.one();
    Infinitesimal inf = infinitesimal(DeformationSeries{d, {K1, K2}});
    EXPECT_EQ(inf.K1.to_map(), K1);
    EXPECT_TRUE(inf.cocycle.pass);
}

TEST(FormalDeformation, InfinitesimalRejectsNonDeformation) {
    Field q = Field::rationals();
    Matrix K1(q, 3, 3);
    K1.at(2, 2) = q.one();
    EXPECT_THROW(infinitesimal(DeformationSeries{e11_g3(q), {K1}}), UnverifiedSeries);
}

TEST(Equivalence, ConstructedPairsDifferByCoboundary) {
    Rng rng(55);
    Field q = Field::rationals();
    for (int t = 0; t < 30; ++t) {
        ReynoldsData d = random_instance(q, rng, t);
        Matrix K1 = random_cocycle(d, rng);
        Vec x = zero_vec(q, d.dim_g());
        for (auto& s : x) s = random_scalar(q, rng);
        Matrix K1p = equivalent_deformation(d, K1, x);
        EXPECT_EQ(K1 - K1p, coboundary_K_degree0(d, x));
        Report r = check_equivalence_data(d, K1, K1p, x);
        EXPECT_TRUE(part(part(r, "diffe"), "1").pass);
    }
}

TEST(NijenhuisElements, EnumerationMatchesPointwiseChecks) {
    Field f = Field::prime(2);
    ReynoldsData d = e11_g3(f);
    std::vector<Vec> all = enumerate_nijenhuis(d);
    std::size_t expected = 0;
    for (auto a : f.elements())
        for (auto b : f.elements())
            for (auto c : f.elements()) expected += check_nijenhuis_element(d, {a, b, c}).pass;
    EXPECT_EQ(all.size(), expected);
    EXPECT_EQ(enumerate_nijenhuis(d), all);
}

TEST(NijenhuisElements, ZeroIsAlwaysAnElement) {
    Rng rng(56);
    Field q = Field::rationals();
    for (int t = 0; t < 10; ++t) {
        ReynoldsData d = random_instance(q, rng, t);
        EXPECT_TRUE(check_nijenhuis_element(d, zero_vec(q, d.dim_g())).pass);
    }
}

TEST(NijenhuisElements, Errors) {
    EXPECT_THROW(enumerate_nijenhuis(e11_g3(Field::rationals())), InfiniteField);
    EXPECT_THROW(enumerate_nijenhuis(e11_g3(Field::prime(7)), 100), BudgetExceeded);
}

TEST(Rigidity, DeterministicVerdicts) {
    for (const ReynoldsData& d : {dim1(Field::prime(2)), e11_g3(Field::prime(2))}) {
        Report a = rigidity_probe(d), b = rigidity_probe(d);
        EXPECT_EQ(a.pass, b.pass);
        EXPECT_EQ(a.details, b.details);
        KernelBasis z = kernel(coboundary_K_matrix(d, 1));
        EXPECT_EQ(detail(a, "dimZ1"), std::to_string(z.dim()));
        EXPECT_EQ(a.pass, detail(a, "condition") == "holds");
    }
}

TEST(Rigidity, NeedsPrimeField) { EXPECT_THROW(rigidity_probe(dim1(Field::rationals())), InfiniteField); }
