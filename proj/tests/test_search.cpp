#include <gtest/gtest.h>

#include <algorithm>

#include "prelie/errors.hpp"
#include "prelie/nsprelie.hpp"
#include "prelie/search.hpp"
#include "support.hpp"

using namespace prelie;
using namespace prelie::testing;

namespace {

// Same componentwise oracle as the Reynolds tests, kept local to this suite.
bool g3_componentwise(const Matrix& a) {
    const Field& f = a.field();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                Scalar lhs = k == 1 ? a.at(2, i) * a.at(2, j) : f.zero();
                Scalar coeff = f.zero();
                if (j == 2) coeff += a.at(2, i);
                if (i == 2) coeff += a.at(2, j);
                if (lhs != coeff * a.at(k, 1) + a.at(2, i) * a.at(2, j) * a.at(k, 2)) return false;
            }
    return true;
}

SearchSpec g3_spec(const Field& f) {
    SearchSpec s;
    s.predicate = "rcw-reynolds";
    s.context = g3_data(f, Matrix(f, 3, 3));
    s.domain = f.elements();
    s.rows = 3;
    s.cols = 3;
    return s;
}

// Lexicographic enumeration with the first entry most significant.
std::vector<Matrix> all_matrices(const Field& f, std::size_t rows, std::size_t cols) {
    auto el = f.elements();
    std::size_t n = rows * cols, p = el.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<Matrix> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Matrix m(f, rows, cols);
        std::size_t rest = idx;
        for (std::size_t k = n; k-- > 0;) {
            m.at(k / cols, k % cols) = el[rest % p];
            rest /= p;
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace

TEST(Search, G3OverF2MatchesOracleInOrder) {
    Field f = Field::prime(2);
    SearchResult r = exhaustive_search(g3_spec(f));
    EXPECT_EQ(r.candidates, 512u);
    std::vector<Matrix> expected;
    for (const auto& m : all_matrices(f, 3, 3))
        if (g3_componentwise(m)) expected.push_back(m);
    EXPECT_EQ(r.solutions, expected);
}

TEST(Search, FixedThirdRowGivesEveryCandidate) {
    Field f = Field::prime(3);
    SearchSpec s = g3_spec(f);
    s.fixed = parse_fixed_entries("3,1=0;3,2=0;3,3=0", f);
    SearchResult r = exhaustive_search(s);
    EXPECT_EQ(r.candidates, 729u);
    EXPECT_EQ(r.count(), 729u);
}

TEST(Search, WorkerCountDoesNotChangeResults) {
    Field f = Field::prime(3);
    SearchSpec s = g3_spec(f);
    s.workers = 1;
    SearchResult one = exhaustive_search(s);
    s.workers = 4;
    SearchResult four = exhaustive_search(s);
    EXPECT_EQ(one.solutions, four.solutions);
    EXPECT_EQ(one.candidates, four.candidates);
}

TEST(Search, BudgetIsEnforced) {
    SearchSpec s = g3_spec(Field::prime(3));
    s.budget = 1000;
    EXPECT_THROW(exhaustive_search(s), BudgetExceeded);
}

TEST(Search, UnknownPredicateAndBadShape) {
    SearchSpec s = g3_spec(Field::prime(2));
    s.predicate = "no-such-thing";
    EXPECT_THROW(exhaustive_search(s), ShapeError);
    s = g3_spec(Field::prime(2));
    s.rows = 2;
    EXPECT_THROW(exhaustive_search(s), ShapeError);
}

TEST(Search, FixedEntryParsing) {
    Field f = Field::prime(3);
    auto e = parse_fixed_entries("1,2=2; 3,3=-1", f);
    ASSERT_EQ(e.size(), 2u);
    EXPECT_EQ(e[0].row, 0u);
    EXPECT_EQ(e[0].col, 1u);
    EXPECT_EQ(e[1].value, f.from_int(2));
    EXPECT_THROW(parse_fixed_entries("0,1=1", f), ShapeError);
    EXPECT_THROW(parse_fixed_entries("1-1", f), ShapeError);
}

TEST(Search, RegistryListsPredicates) {
    auto ids = PredicateRegistry::instance().ids();
    for (const char* id : {"rcw-reynolds", "maurer-cartan", "graph-subalgebra", "nijenhuis", "derivation",
                           "weighted-reynolds", "nijenhuis-element"})
        EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
}

TEST(Search, NijenhuisPredicateAgreesWithChecker) {
    Field f = Field::prime(3);
    PreLieAlgebra g(f, 2);
    g.set(1, 0, 0, f.from_int(-1));
    g.set(1, 1, 1, f.one());
    SearchSpec s;
    s.predicate = "nijenhuis";
    s.context = ReynoldsData{g, regular_representation(g), Cochain(f, 2, 2, 2), Matrix(f, 2, 2)};
    s.domain = f.elements();
    s.rows = s.cols = 2;
    SearchResult r = exhaustive_search(s);
    std::size_t expected = 0;
    for (const auto& m : all_matrices(f, 2, 2)) expected += check_nijenhuis(g, m).pass;
    EXPECT_EQ(r.count(), expected);
}

TEST(PolynomialSystem, HasEighteenEquationsVanishingOnTheFamily) {
    Rng rng(71);
    Field q = Field::rationals();
    for (int t = 0; t < 20; ++t) {
        Matrix K = random_matrix(q, 3, 3, rng);
        for (std::size_t c = 0; c < 3; ++c) K.at(2, c) = q.zero();
        auto res = g3_polynomial_system(K);
        EXPECT_EQ(res.size(), 18u);
        for (const auto& x : res) EXPECT_TRUE(x.is_zero());
    }
}

TEST(PolynomialSystem, AgreesWithComponentwiseOracleOverF3) {
    Field f = Field::prime(3);
    std::size_t agree = 0, total = 0;
    for (const auto& m : all_matrices(f, 3, 3)) {
        auto res = g3_polynomial_system(m);
        bool zero = std::all_of(res.begin(), res.end(), [](const Scalar& s) { return s.is_zero(); });
        agree += zero == g3_componentwise(m);
        ++total;
    }
    EXPECT_EQ(agree, total);
}

TEST(PolynomialSystem, VerifiedOverF2AndF3) {
    for (std::uint64_t p : {2, 3}) {
        Report r = verify_polynomial_system(Field::prime(p));
        EXPECT_TRUE(r.pass) << p;
    }
    EXPECT_THROW(verify_polynomial_system(Field::rationals()), InfiniteField);
}
