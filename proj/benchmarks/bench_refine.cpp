#include <benchmark/benchmark.h>

#include "speciso/construct.hpp"
#include "speciso/oracle.hpp"
#include "speciso/random_graph.hpp"
#include "speciso/refine.hpp"

using namespace speciso;

static void BM_CheckRelabeledPair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = generate_random_graph(n, 0.5, 21);
    Graph h = apply_permutation(g, random_permutation(n, 22));
    for (auto _ : state) {
        RefineOutcome r = refine_fixpoint(g, h);
        benchmark::DoNotOptimize(r);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_CheckRelabeledPair)->RangeMultiplier(2)->Range(8, 32)->Complexity();

static void BM_MapRelabeledPair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = generate_random_graph(n, 0.5, 23);
    Graph h = apply_permutation(g, random_permutation(n, 24));
    for (auto _ : state) {
        MapOutcome m = construct_isomorphism(g, h);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_MapRelabeledPair)->RangeMultiplier(2)->Range(8, 32);

static void BM_OracleRelabeledPair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = generate_random_graph(n, 0.5, 25);
    Graph h = apply_permutation(g, random_permutation(n, 26));
    for (auto _ : state) {
        auto p = exact_isomorphism(g, h);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_OracleRelabeledPair)->RangeMultiplier(2)->Range(8, 32);
