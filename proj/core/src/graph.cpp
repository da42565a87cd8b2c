#include "speciso/graph.hpp"

#include <algorithm>
#include <string>

namespace speciso {

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw InvariantError("vertex count must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    degrees_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvariantError("edge endpoint out of range: {" + std::to_string(u) +
                             "," + std::to_string(v) + "} with n=" + std::to_string(n_));
    if (u == v)
        throw InvariantError("self-loop rejected at vertex " + std::to_string(u));
    if (adj_[idx(u, v)])
        return;
    adj_[idx(u, v)] = 1;
    adj_[idx(v, u)] = 1;
    ++degrees_[u];
    ++degrees_[v];
    ++edges_;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degrees_[v]));
    for (int u = 0; u < n_; ++u)
        if (adj_[idx(v, u)])
            out.push_back(u);
    return out;
}

std::vector<int> Graph::sorted_degree_sequence() const {
    std::vector<int> d = degrees_;
    std::sort(d.begin(), d.end());
    return d;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw InvariantError("permutation image is not a bijection on {1.." +
                                 std::to_string(n) + "}");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        image[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(image));
}

Permutation Permutation::from_one_indexed(const std::vector<int>& image) {
    std::vector<int> zero_based;
    zero_based.reserve(image.size());
    for (int v : image)
        zero_based.push_back(v - 1);
    return Permutation(std::move(zero_based));
}

Permutation Permutation::compose(const Permutation& inner) const {
    if (size() != inner.size())
        throw DimensionError("compose: size mismatch");
    std::vector<int> image(image_.size());
    for (int v = 0; v < size(); ++v)
        image[static_cast<std::size_t>(v)] = image_[static_cast<std::size_t>(inner(v))];
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> image(image_.size());
    for (int v = 0; v < size(); ++v)
        image[static_cast<std::size_t>(image_[static_cast<std::size_t>(v)])] = v;
    return Permutation(std::move(image));
}

std::vector<int> Permutation::one_indexed_image() const {
    std::vector<int> out;
    out.reserve(image_.size());
    for (int v : image_)
        out.push_back(v + 1);
    return out;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (g.order() != p.size())
        throw DimensionError("apply_permutation: permutation size " +
                             std::to_string(p.size()) + " != graph order " +
                             std::to_string(g.order()));
    Graph h(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                h.add_edge(p(u), p(v));
    return h;
}

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p) {
    if (g.order() != h.order() || g.order() != p.size())
        throw DimensionError("is_isomorphism: size mismatch");
    return first_mapping_violation(g, h, p).first < 0;
}

std::pair<int, int> first_mapping_violation(const Graph& g, const Graph& h,
                                            const Permutation& p) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v) != h.adjacent(p(u), p(v)))
                return {u, v};
    return {-1, -1};
}

} // namespace speciso
