#include "speciso/fixtures.hpp"

#include "speciso/random_graph.hpp"

namespace speciso::fixtures {

namespace {

int cell(int row, int col) { return 4 * row + col; }

} // namespace

Graph shrikhande() {
    Graph g(16);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const int deltas[3][2] = {{0, 1}, {1, 0}, {1, 1}};
            for (const auto& d : deltas)
                g.add_edge(cell(a, b), cell((a + d[0]) % 4, (b + d[1]) % 4));
        }
    }
    return g;
}

Graph rook_4x4() {
    Graph g(16);
    for (int u = 0; u < 16; ++u) {
        for (int v = u + 1; v < 16; ++v) {
            const bool same_row = u / 4 == v / 4;
            const bool same_col = u % 4 == v % 4;
            if (same_row != same_col)
                g.add_edge(u, v);
        }
    }
    return g;
}

Graph c4_plus_k1() {
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Graph star_k14() {
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

std::vector<FixturePair> probe_pairs() {
    const Graph shri = shrikhande();
    const Graph rook = rook_4x4();
    // Fixed relabelings keep the family deterministic without a seed flag.
    const Permutation sigma = random_permutation(16, 0x5eed0f1a7u);
    return {
        {"srg16-shrikhande-vs-rook", shri, rook},
        {"srg16-shrikhande-relabeled", shri, apply_permutation(shri, sigma)},
        {"srg16-rook-relabeled", rook, apply_permutation(rook, sigma)},
        {"cospectral-c4k1-vs-star", c4_plus_k1(), star_k14()},
    };
}

} // namespace speciso::fixtures
