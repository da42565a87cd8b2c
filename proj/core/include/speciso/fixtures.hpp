#ifndef SPECISO_FIXTURES_HPP
#define SPECISO_FIXTURES_HPP

#include <string>
#include <vector>

#include "speciso/graph.hpp"

namespace speciso::fixtures {

/// Shrikhande graph: vertices Z4 x Z4, (a,b) ~ (c,d) iff the difference is
/// one of +-(0,1), +-(1,0), +-(1,1). Strongly regular with parameters
/// (16, 6, 2, 2).
Graph shrikhande();

/// 4x4 rook's graph (line graph of K_{4,4}): vertices Z4 x Z4, adjacent iff
/// they share exactly one coordinate. Also SRG(16, 6, 2, 2), cospectral
/// with the Shrikhande graph but not isomorphic to it.
Graph rook_4x4();

/// C4 plus an isolated vertex: the smaller half of the classical smallest
/// cospectral pair on 5 vertices.
Graph c4_plus_k1();

/// Star K_{1,4} (center is vertex 1): cospectral with c4_plus_k1 (both have
/// characteristic polynomial x^5 - 4x^3) yet plainly non-isomorphic.
Graph star_k14();

struct FixturePair {
    std::string name;
    Graph left;
    Graph right;
};

/// The bundled probe pairs used by `hunt --family fixtures`: both SRG(16,6,2,2)
/// graphs against each other and against relabeled copies of themselves, plus
/// the cospectral 5-vertex pair.
std::vector<FixturePair> probe_pairs();

} // namespace speciso::fixtures

#endif
