#ifndef SPECISO_ORACLE_HPP
#define SPECISO_ORACLE_HPP

#include <optional>
#include <vector>

#include "speciso/graph.hpp"

namespace speciso {

/// Stable vertex coloring: two vertices share a color iff they agreed, at
/// every round, on color and multiset of neighbor colors. Colors are
/// canonically numbered by first appearance in vertex order.
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;
};

/// Classical 1-dimensional color refinement on a single graph.
Coloring color_refinement(const Graph& g);

/// Joint stable coloring of the disjoint union of g and h, reported per
/// side. Colors are comparable across the two graphs, which makes this the
/// sound basis for cross-graph pruning and for invariance checks.
std::pair<Coloring, Coloring> joint_color_refinement(const Graph& g, const Graph& h);

inline constexpr int kDefaultOracleLimit = 32;

/// Exact ground truth: backtracking search with color-refinement pruning,
/// branching on the smallest color class first and trying candidate targets
/// in ascending index. Returns a verified isomorphism or nullopt. Inputs
/// larger than `limit` vertices are refused with OracleLimitError, never
/// answered approximately.
std::optional<Permutation> exact_isomorphism(const Graph& g, const Graph& h,
                                             int limit = kDefaultOracleLimit);

} // namespace speciso

#endif
