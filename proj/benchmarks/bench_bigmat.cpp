#include <benchmark/benchmark.h>

#include "speciso/bigmat.hpp"
#include "speciso/random_graph.hpp"
#include "speciso/refine.hpp"

using namespace speciso;

namespace {

BigSymMatrix embedded_random(int n, std::uint64_t seed) {
    Graph g = generate_random_graph(n, 0.5, seed);
    auto d = assign_diagonals(MatchedPartition::single_class(n), n);
    return embed_with_diagonal(g, d.first);
}

} // namespace

static void BM_Multiply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BigSymMatrix b = embedded_random(n, 11);
    // Square of a high power: entries at realistic signature-path widths.
    BigSymMatrix p = b;
    for (int k = 1; k < n / 2; ++k)
        p = multiply(p, b);
    for (auto _ : state) {
        BigSymMatrix q = multiply(p, b);
        benchmark::DoNotOptimize(q);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_SignatureTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    BigSymMatrix b = embedded_random(n, 12);
    for (auto _ : state) {
        SignatureTable t = signature_table(b);
        benchmark::DoNotOptimize(t);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_SignatureTable)->RangeMultiplier(2)->Range(8, 32)->Complexity();
