#include "speciso/random_graph.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace speciso {

namespace {

// Top 53 bits -> [0, 1). Avoids std::uniform_real_distribution, whose
// output is implementation-defined; the determinism contract requires
// identical graphs on every platform.
double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased enough for test-instance generation and fully deterministic.
std::size_t bounded(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

template <typename T>
void shuffle_fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[bounded(rng, i)]);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph generate_random_graph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0)
        throw InvariantError("edge probability must lie in [0,1], got " +
                             std::to_string(p));
    std::mt19937_64 rng(seed);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (canonical_unit(rng) < p)
                g.add_edge(i, j);
    return g;
}

Permutation random_permutation(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        image[static_cast<std::size_t>(i)] = i;
    shuffle_fisher_yates(image, rng);
    return Permutation(std::move(image));
}

Graph generate_random_regular(int n, int degree, std::uint64_t seed) {
    if (degree < 0 || degree >= n)
        throw InvariantError("regular degree must satisfy 0 <= d < n");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw InvariantError("n*d must be even for a d-regular graph");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(degree));

    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < degree; ++k)
                stubs.push_back(v);
        shuffle_fisher_yates(stubs, rng);

        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i];
            const int v = stubs[i + 1];
            if (u == v || g.adjacent(u, v)) {
                ok = false;
                break;
            }
            g.add_edge(u, v);
        }
        if (ok)
            return g;
    }
    throw Error("pairing model failed to produce a simple " + std::to_string(degree) +
                "-regular graph on " + std::to_string(n) + " vertices");
}

} // namespace speciso
