#ifndef SPECISO_GRAPH_HPP
#define SPECISO_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "speciso/errors.hpp"

namespace speciso {

/// Simple undirected graph: vertex count plus a symmetric, zero-diagonal
/// adjacency relation. Vertices are 0-indexed in this API; all textual
/// interfaces (edge lists, permutation files, reports) use 1-indexed
/// vertices and convert at the boundary.
///
/// Values are immutable once built; add_edge is only meant for the
/// construction phase inside parsers and generators.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[idx(u, v)] != 0; }

    /// Rejects self-loops and out-of-range endpoints. Adding an existing
    /// edge is a no-op (undirected edges collapse).
    void add_edge(int u, int v);

    int degree(int v) const { return degrees_[v]; }
    std::vector<int> neighbors(int v) const;
    std::vector<int> sorted_degree_sequence() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::size_t edges_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degrees_;
};

/// Bijection on {0..n-1} with value semantics.
class Permutation {
public:
    Permutation() = default;

    /// `image[v]` is the image of vertex v (0-indexed). Throws
    /// InvariantError unless the image is a bijection.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    static Permutation from_one_indexed(const std::vector<int>& image);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[v]; }

    /// (a.compose(b))(v) = a(b(v)).
    Permutation compose(const Permutation& inner) const;
    Permutation inverse() const;

    const std::vector<int>& image() const { return image_; }
    std::vector<int> one_indexed_image() const;

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> image_;
};

/// Relabels g: the result has edge {p(u), p(v)} iff g has edge {u, v}.
Graph apply_permutation(const Graph& g, const Permutation& p);

/// True iff p maps g onto h edge-for-edge. Runs in O(n^2); this is the
/// adjacency-commutation test specialized to 0/1 matrices.
bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p);

/// First vertex pair (u, v), in lexicographic order, where the mapping
/// fails: g.adjacent(u,v) != h.adjacent(p(u),p(v)). Returns {-1,-1} when
/// p is an isomorphism. Used to report evidence for failed candidates.
std::pair<int, int> first_mapping_violation(const Graph& g, const Graph& h,
                                            const Permutation& p);

} // namespace speciso

#endif
