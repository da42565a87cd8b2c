#ifndef SPECISO_REFINE_HPP
#define SPECISO_REFINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "speciso/bigmat.hpp"
#include "speciso/graph.hpp"

namespace speciso {

/// Paired ordered equivalence classes over both graphs' vertices. Class x
/// holds the vertices of graph 1 (left) and graph 2 (right) sharing the
/// x-th smallest signature row; |left| == |right| for every class and the
/// classes are ordered by strictly ascending class signature.
struct MatchedPartition {
    struct ClassPair {
        std::vector<int> left;  // ascending vertex indices
        std::vector<int> right; // ascending vertex indices
    };

    int order = 0; // n
    std::vector<ClassPair> classes;

    int count() const { return static_cast<int>(classes.size()); }

    /// The initial state: one class holding every vertex of both graphs
    /// (empty for n = 0).
    static MatchedPartition single_class(int n);

    /// Throws InvariantError unless both sides partition {0..n-1} with
    /// equal per-class sizes.
    void validate() const;
};

/// Why two graphs were told apart, or why no verdict was possible.
struct Witness {
    enum class Kind {
        size_mismatch,
        edge_count_mismatch,
        signature_mismatch,
    };

    Kind kind = Kind::signature_mismatch;
    // For signature mismatches: 1-based rank in the sorted row lists and
    // 1-based power k where that rank's rows first differ, plus both values.
    int rank = 0;
    int k = 0;
    mpz_class lhs{0};
    mpz_class rhs{0};
};

struct RefineOutcome {
    enum class Kind { not_isomorphic, stable };

    Kind kind = Kind::stable;
    Witness witness;                  // meaningful when not_isomorphic
    MatchedPartition partition;       // meaningful when stable
    std::vector<int> class_count_history; // class count after each iteration
    int iterations = 0;
    PowerStats work;

    bool stable() const { return kind == Kind::stable; }
};

/// Diagonal scheme d_i = 4n*x for vertices in class x (1-based class index
/// in signature order), applied to both graphs so matched classes share a
/// value. The result always satisfies the DiagonalAssignment invariants.
std::pair<DiagonalAssignment, DiagonalAssignment>
assign_diagonals(const MatchedPartition& partition, int n);

/// Groups vertices with identical signature rows into classes and pairs the
/// classes of both graphs by their shared row. Returns a Witness instead if
/// the sorted row lists differ, pointing at the earliest differing rank.
struct SplitResult {
    std::optional<MatchedPartition> partition;
    std::optional<Witness> mismatch;
};

SplitResult split_classes(const SignatureTable& sig1, const SignatureTable& sig2);

/// Iterated paired refinement to a fixed point or a refutation: reassign
/// diagonals from the current classes, rebuild both signature tables, split,
/// and stop when the class count stops growing. At most n iterations.
RefineOutcome refine_fixpoint(const Graph& g, const Graph& h);

} // namespace speciso

#endif
