#ifndef SPECISO_RANDOM_GRAPH_HPP
#define SPECISO_RANDOM_GRAPH_HPP

#include <cstdint>

#include "speciso/graph.hpp"

namespace speciso {

/// Erdos-Renyi G(n, p): each unordered pair is an edge independently with
/// probability p. Bit-stable across platforms for a fixed (n, p, seed).
Graph generate_random_graph(int n, double p, std::uint64_t seed);

Permutation random_permutation(int n, std::uint64_t seed);

/// Random d-regular graph via the pairing model with rejection. Requires
/// n*d even and d < n; throws InvariantError otherwise. Deterministic for
/// fixed (n, d, seed).
Graph generate_random_regular(int n, int degree, std::uint64_t seed);

/// splitmix64; used to derive independent per-instance seeds from a master
/// seed without correlated streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

} // namespace speciso

#endif
