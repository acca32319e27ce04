#include <benchmark/benchmark.h>

#include <cstdint>

#include "prelie/brackets.hpp"
#include "prelie/cochain.hpp"
#include "prelie/generators.hpp"
#include "prelie/kcohomology.hpp"
#include "prelie/reynolds.hpp"
#include "prelie/search.hpp"

namespace {

using namespace prelie;

LinearMap g3_row_zero(const Field& f) {
    LinearMap K(f, 3, 3);
    K.at(0, 0) = f.from_int(1);
    K.at(0, 1) = f.from_int(-2);
    K.at(1, 1) = f.from_int(5);
    K.at(1, 2) = f.from_int(-1);
    return K;
}

void BM_SearchG3(benchmark::State& state) {
    Field f = Field::prime(static_cast<std::uint64_t>(state.range(0)));
    SearchSpec spec;
    spec.predicate = "rcw-reynolds";
    spec.context = g3_data(f, LinearMap(f, 3, 3));
    spec.domain = f.elements();
    spec.rows = 3;
    spec.cols = 3;
    spec.workers = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        SearchResult r = exhaustive_search(spec);
        benchmark::DoNotOptimize(r.solutions.data());
    }
}
BENCHMARK(BM_SearchG3)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_RcwCheck(benchmark::State& state) {
    Field q = Field::rationals();
    ReynoldsData d = g3_data(q, g3_row_zero(q));
    for (auto _ : state) benchmark::DoNotOptimize(is_rcw_reynolds(d));
}
BENCHMARK(BM_RcwCheck);

void BM_Coboundary(benchmark::State& state) {
    Field q = Field::rationals();
    Rng rng(7);
    auto dim = static_cast<std::size_t>(state.range(0));
    auto degree = static_cast<std::size_t>(state.range(1));
    PreLieAlgebra g = random_prelie(q, dim, rng);
    Representation rep = regular_representation(g);
    Cochain f = random_cochain(q, degree, dim, dim, rng);
    for (auto _ : state) {
        Cochain df = coboundary(g, rep, f);
        benchmark::DoNotOptimize(&df);
    }
}
BENCHMARK(BM_Coboundary)->Args({3, 1})->Args({3, 2})->Args({3, 3})->Args({4, 2});

void BM_CohomologyK(benchmark::State& state) {
    Field q = Field::rationals();
    ReynoldsData d = g3_data(q, g3_row_zero(q));
    auto degree = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        KCohomologyReport r = cohomology_K(d, degree);
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(BM_CohomologyK)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_McCombination(benchmark::State& state) {
    Field q = Field::rationals();
    ReynoldsData d = g3_data(q, g3_row_zero(q));
    for (auto _ : state) {
        GradedElement r = mc_combination(d);
        benchmark::DoNotOptimize(&r);
    }
}
BENCHMARK(BM_McCombination)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
