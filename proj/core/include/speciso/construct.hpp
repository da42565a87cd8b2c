#ifndef SPECISO_CONSTRUCT_HPP
#define SPECISO_CONSTRUCT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "speciso/refine.hpp"

namespace speciso {

/// One individualization round: which class was split open, which vertex of
/// each graph was forced into its own class, and the diagonal override they
/// received. `stale_diagonals_would_collide` records whether keeping the
/// previous rounds' diagonal values (instead of reassigning per class)
/// would have produced equal values in different classes or distinct values
/// closer than 4n.
struct IndividualizationChoice {
    int class_index = 0; // 1-based position in signature order
    int left_vertex = 0; // 1-based external vertex ids
    int right_vertex = 0;
    long override_value = 0;
    bool stale_diagonals_would_collide = false;
};

struct ConstructOptions {
    /// When the induced permutation fails verification, retry the round's
    /// individualization with each other right-side candidate before giving
    /// up. Off by default: the single lowest-index choice is the documented
    /// deterministic rule, and its failures are findings worth surfacing.
    bool retry_right_candidates = false;
};

struct MapOutcome {
    enum class Kind { verified_isomorphism, not_isomorphic, candidate_failed };

    Kind kind = Kind::not_isomorphic;

    /// Set for verified_isomorphism (always re-checked against both graphs
    /// before being returned) and for candidate_failed (the rejected map).
    std::optional<Permutation> permutation;

    Witness witness; // meaningful when not_isomorphic

    /// For candidate_failed: first vertex pair {u,v} (1-based) whose
    /// adjacency disagrees with {p(u),p(v)}.
    std::optional<std::pair<int, int>> failing_pair;

    std::vector<IndividualizationChoice> trace;
    std::vector<int> refine_history;
    int individualization_rounds = 0;
    PowerStats work;

    bool verified() const { return kind == Kind::verified_isomorphism; }
};

/// Picks the first class (in signature order) with more than one member,
/// takes the lowest-indexed vertex on each side, and returns per-class
/// diagonals with those two entries overridden to 4*(c+1)*n. Throws
/// InvariantError when every class is a singleton.
struct IndividualizeStep {
    DiagonalAssignment left;
    DiagonalAssignment right;
    IndividualizationChoice chosen;
};

IndividualizeStep individualize_step(const MatchedPartition& partition, int n);

/// Reads the permutation off two discrete signature tables: the vertex
/// holding the rank-r row of table 1 maps to the vertex holding the rank-r
/// row of table 2. Requires all rows distinct within each table and equal
/// sorted row sequences; anything else throws InvariantError.
Permutation permutation_from_discrete(const SignatureTable& sig1,
                                      const SignatureTable& sig2);

/// Refine to a fixed point, then individualize-and-refine until the classes
/// are discrete, extract the induced permutation, and verify it. Every
/// verified_isomorphism outcome has passed is_isomorphism; a candidate that
/// fails verification is returned as candidate_failed together with the
/// evidence and the full choice trace.
MapOutcome construct_isomorphism(const Graph& g, const Graph& h,
                                 const ConstructOptions& options = {});

} // namespace speciso

#endif
