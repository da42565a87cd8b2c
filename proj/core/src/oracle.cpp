#include "speciso/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace speciso {

namespace {

// One refinement pass over an adjacency callback; returns the new coloring
// with canonical ids. Works for both the single-graph and the joint case.
template <typename NeighborsOf>
std::vector<int> refine_once(const std::vector<int>& color, int n,
                             NeighborsOf&& neighbors_of, int& num_colors) {
    std::vector<std::pair<int, std::vector<int>>> keys(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> around;
        for (int u : neighbors_of(v))
            around.push_back(color[static_cast<std::size_t>(u)]);
        std::sort(around.begin(), around.end());
        keys[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)],
                                             std::move(around)};
    }
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<int> next(static_cast<std::size_t>(n));
    num_colors = 0;
    for (int v = 0; v < n; ++v) {
        auto [it, inserted] = ids.try_emplace(keys[static_cast<std::size_t>(v)], num_colors);
        if (inserted)
            ++num_colors;
        next[static_cast<std::size_t>(v)] = it->second;
    }
    return next;
}

template <typename NeighborsOf>
Coloring refine_to_stable(int n, NeighborsOf&& neighbors_of) {
    Coloring c;
    c.color.assign(static_cast<std::size_t>(n), 0);
    c.num_colors = n > 0 ? 1 : 0;
    while (n > 0) {
        int next_count = 0;
        std::vector<int> next = refine_once(c.color, n, neighbors_of, next_count);
        // Refinement only splits classes, so an unchanged count means an
        // unchanged partition.
        if (next_count == c.num_colors) {
            c.color = std::move(next); // canonical renumbering of the same classes
            break;
        }
        c.color = std::move(next);
        c.num_colors = next_count;
    }
    return c;
}

} // namespace

Coloring color_refinement(const Graph& g) {
    return refine_to_stable(g.order(), [&g](int v) { return g.neighbors(v); });
}

std::pair<Coloring, Coloring> joint_color_refinement(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        throw DimensionError("joint_color_refinement: order mismatch");
    const int n = g.order();
    Coloring joint = refine_to_stable(2 * n, [&](int v) {
        std::vector<int> out;
        if (v < n) {
            out = g.neighbors(v);
        } else {
            out = h.neighbors(v - n);
            for (int& u : out)
                u += n;
        }
        return out;
    });
    Coloring left, right;
    left.color.assign(joint.color.begin(), joint.color.begin() + n);
    right.color.assign(joint.color.begin() + n, joint.color.end());
    left.num_colors = joint.num_colors;
    right.num_colors = joint.num_colors;
    return {std::move(left), std::move(right)};
}

namespace {

struct BacktrackState {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& order;            // g vertices, branch order
    const std::vector<std::vector<int>>& targets; // per g-vertex: candidate h vertices
    std::vector<int> map_gh;                  // g -> h or -1
    std::vector<char> used;                   // h vertex already taken
};

bool extend(BacktrackState& st, std::size_t depth) {
    if (depth == st.order.size())
        return true;
    const int u = st.order[depth];
    for (int v : st.targets[static_cast<std::size_t>(u)]) {
        if (st.used[static_cast<std::size_t>(v)])
            continue;
        bool consistent = true;
        for (std::size_t d = 0; d < depth; ++d) {
            const int w = st.order[d];
            if (st.g.adjacent(u, w) !=
                st.h.adjacent(v, st.map_gh[static_cast<std::size_t>(w)])) {
                consistent = false;
                break;
            }
        }
        if (!consistent)
            continue;
        st.map_gh[static_cast<std::size_t>(u)] = v;
        st.used[static_cast<std::size_t>(v)] = 1;
        if (extend(st, depth + 1))
            return true;
        st.map_gh[static_cast<std::size_t>(u)] = -1;
        st.used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

} // namespace

std::optional<Permutation> exact_isomorphism(const Graph& g, const Graph& h,
                                             int limit) {
    const int n = std::max(g.order(), h.order());
    if (n > limit)
        throw OracleLimitError(n, limit);
    if (g.order() != h.order())
        return std::nullopt;
    if (g.edge_count() != h.edge_count())
        return std::nullopt;
    if (g.order() == 0)
        return Permutation::identity(0);

    const std::pair<Coloring, Coloring> joint = joint_color_refinement(g, h);
    const Coloring& cg = joint.first;
    const Coloring& ch = joint.second;

    // Matched color classes must have equal sizes on both sides.
    std::vector<int> size_g(static_cast<std::size_t>(cg.num_colors), 0);
    std::vector<int> size_h(static_cast<std::size_t>(ch.num_colors), 0);
    for (int v = 0; v < g.order(); ++v) {
        ++size_g[static_cast<std::size_t>(cg.color[static_cast<std::size_t>(v)])];
        ++size_h[static_cast<std::size_t>(ch.color[static_cast<std::size_t>(v)])];
    }
    if (size_g != size_h)
        return std::nullopt;

    std::vector<std::vector<int>> targets(static_cast<std::size_t>(g.order()));
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            if (cg.color[static_cast<std::size_t>(u)] ==
                ch.color[static_cast<std::size_t>(v)])
                targets[static_cast<std::size_t>(u)].push_back(v);

    // Smallest color class first; ties by color id, then vertex index.
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int ca = cg.color[static_cast<std::size_t>(a)];
        const int cb = cg.color[static_cast<std::size_t>(b)];
        if (size_g[static_cast<std::size_t>(ca)] != size_g[static_cast<std::size_t>(cb)])
            return size_g[static_cast<std::size_t>(ca)] <
                   size_g[static_cast<std::size_t>(cb)];
        if (ca != cb)
            return ca < cb;
        return a < b;
    });

    BacktrackState st{g, h, order, targets,
                      std::vector<int>(static_cast<std::size_t>(g.order()), -1),
                      std::vector<char>(static_cast<std::size_t>(h.order()), 0)};
    if (!extend(st, 0))
        return std::nullopt;

    Permutation p{std::move(st.map_gh)};
    if (!is_isomorphism(g, h, p))
        throw InvariantError("oracle produced a mapping that fails verification");
    return p;
}

} // namespace speciso
