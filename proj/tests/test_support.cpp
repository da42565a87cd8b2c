#include "test_support.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace speciso::testing {

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3)
        g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i)
        g.add_edge(0, i);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v))
                g.add_edge(u, v);
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.adjacent(u, v))
                g.add_edge(a.order() + u, a.order() + v);
    return g;
}

std::string reference_graph6_encode(const Graph& g) {
    const long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push_back(g.adjacent(row, col) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b)
            value = value * 2 + bits[i + static_cast<std::size_t>(b)];
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

Graph reference_graph6_decode(const std::string& text) {
    std::size_t pos = 0;
    long n = 0;
    if (text.at(0) == '~') {
        n = (static_cast<long>(text.at(1) - 63) << 12) |
            (static_cast<long>(text.at(2) - 63) << 6) |
            static_cast<long>(text.at(3) - 63);
        pos = 4;
    } else {
        n = text.at(0) - 63;
        pos = 1;
    }
    std::vector<int> bits;
    for (; pos < text.size(); ++pos) {
        const int value = text.at(pos) - 63;
        for (int b = 5; b >= 0; --b)
            bits.push_back((value >> b) & 1);
    }
    Graph g(static_cast<int>(n));
    std::size_t next = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            if (bits.at(next++))
                g.add_edge(row, col);
    return g;
}

TestMatrix to_test_matrix(const BigSymMatrix& m) {
    TestMatrix out(static_cast<std::size_t>(m.dim()),
                   std::vector<mpz_class>(static_cast<std::size_t>(m.dim())));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    return out;
}

TestMatrix naive_product(const TestMatrix& a, const TestMatrix& b) {
    const std::size_t n = a.size();
    TestMatrix out(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

mpz_class trace_of(const TestMatrix& m) {
    mpz_class t = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        t += m[i][i];
    return t;
}

std::optional<Permutation> brute_force_isomorphism(const Graph& g, const Graph& h) {
    if (g.order() != h.order())
        return std::nullopt;
    std::vector<int> image(static_cast<std::size_t>(g.order()));
    std::iota(image.begin(), image.end(), 0);
    do {
        Permutation p{std::vector<int>(image)};
        if (is_isomorphism(g, h, p))
            return p;
    } while (std::next_permutation(image.begin(), image.end()));
    return std::nullopt;
}

std::uint32_t adjacency_bitmask(const Graph& g) {
    std::uint32_t mask = 0;
    int bit = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j, ++bit)
            if (g.adjacent(i, j))
                mask |= (1u << bit);
    return mask;
}

Graph graph_from_bitmask(int n, std::uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1u << bit))
                g.add_edge(i, j);
    return g;
}

namespace {

// pair_index[i][j] for i<j in the bitmask bit order used above.
std::vector<std::vector<int>> pair_index_table(int n) {
    std::vector<std::vector<int>> idx(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n), -1));
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit) {
            idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bit;
            idx[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bit;
        }
    return idx;
}

std::vector<Graph> enumerate_up_to_iso(int n) {
    if (n == 0)
        return {Graph(0)};
    const int pairs = n * (n - 1) / 2;
    const auto idx = pair_index_table(n);

    // One bit-permutation table per vertex relabeling.
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> bit_maps;
    do {
        std::vector<int> map(static_cast<std::size_t>(pairs));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                map[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])] =
                    idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                       [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
        bit_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> reps;
    const std::uint32_t total = 1u << pairs;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool canonical = true;
        for (const auto& map : bit_maps) {
            std::uint32_t image = 0;
            for (int b = 0; b < pairs; ++b)
                if (mask & (1u << b))
                    image |= (1u << map[static_cast<std::size_t>(b)]);
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (canonical)
            reps.push_back(graph_from_bitmask(n, mask));
    }
    return reps;
}

} // namespace

const std::vector<Graph>& all_graphs_up_to_iso(int n) {
    if (n < 0 || n > 7)
        throw std::out_of_range("enumeration supports 0 <= n <= 7");
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, enumerate_up_to_iso(n)).first;
    return it->second;
}

} // namespace speciso::testing
