#include "speciso/construct.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace speciso {

namespace {

int first_multi_class(const MatchedPartition& partition) {
    for (int x = 0; x < partition.count(); ++x)
        if (partition.classes[static_cast<std::size_t>(x)].left.size() > 1)
            return x;
    return -1;
}

// Diagonals under the literal accumulate-only reading: per-class values
// from the last full reassignment, with each round's override written on
// top. Used purely for logging how that reading degrades.
struct LiteralDiagonals {
    std::vector<long> left;
    std::vector<long> right;
};

bool side_collides(const std::vector<long>& values, const MatchedPartition& partition,
                   bool left_side, int n) {
    std::vector<int> class_of(values.size(), -1);
    for (int x = 0; x < partition.count(); ++x) {
        const auto& members = left_side ? partition.classes[static_cast<std::size_t>(x)].left
                                        : partition.classes[static_cast<std::size_t>(x)].right;
        for (int v : members)
            class_of[static_cast<std::size_t>(v)] = x;
    }
    const int count = static_cast<int>(values.size());
    for (int u = 0; u < count; ++u) {
        for (int v = u + 1; v < count; ++v) {
            const long a = values[static_cast<std::size_t>(u)];
            const long b = values[static_cast<std::size_t>(v)];
            if (a == b && class_of[static_cast<std::size_t>(u)] !=
                              class_of[static_cast<std::size_t>(v)])
                return true;
            if (a != b && std::abs(a - b) < 4L * n)
                return true;
        }
    }
    return false;
}

struct SearchContext {
    const Graph& g;
    const Graph& h;
    bool retry_right;
    PowerStats work;
};

MapOutcome finish_discrete(SearchContext& ctx, const SignatureTable& s1,
                           const SignatureTable& s2,
                           std::vector<IndividualizationChoice> trace) {
    MapOutcome out;
    out.trace = std::move(trace);
    out.individualization_rounds = static_cast<int>(out.trace.size());

    Permutation p = permutation_from_discrete(s1, s2);
    const auto violation = first_mapping_violation(ctx.g, ctx.h, p);
    if (violation.first < 0) {
        out.kind = MapOutcome::Kind::verified_isomorphism;
        out.permutation = std::move(p);
    } else {
        out.kind = MapOutcome::Kind::candidate_failed;
        out.permutation = std::move(p);
        out.failing_pair = std::make_pair(violation.first + 1, violation.second + 1);
    }
    return out;
}

MapOutcome search(SearchContext& ctx, const MatchedPartition& partition,
                  const LiteralDiagonals& literal,
                  const std::vector<IndividualizationChoice>& trace) {
    const int n = partition.order;
    const int x = first_multi_class(partition);
    const auto& cls = partition.classes[static_cast<std::size_t>(x)];
    const int i = cls.left.front();
    const long override_value = 4L * (partition.count() + 1) * n;

    std::vector<int> right_candidates;
    if (ctx.retry_right)
        right_candidates = cls.right;
    else
        right_candidates.push_back(cls.right.front());

    auto [base1, base2] = assign_diagonals(partition, n);
    std::vector<long> d1 = base1.values();
    d1[static_cast<std::size_t>(i)] = override_value;
    // The left table does not depend on the right-side candidate.
    const SignatureTable s1 = signature_table(
        embed_with_diagonal(ctx.g, DiagonalAssignment(std::move(d1))), &ctx.work);

    std::optional<MapOutcome> first_failure;
    for (int j : right_candidates) {
        std::vector<long> d2 = base2.values();
        d2[static_cast<std::size_t>(j)] = override_value;
        SignatureTable s2 = signature_table(
            embed_with_diagonal(ctx.h, DiagonalAssignment(std::move(d2))), &ctx.work);

        LiteralDiagonals next_literal = literal;
        next_literal.left[static_cast<std::size_t>(i)] = override_value;
        next_literal.right[static_cast<std::size_t>(j)] = override_value;

        IndividualizationChoice choice;
        choice.class_index = x + 1;
        choice.left_vertex = i + 1;
        choice.right_vertex = j + 1;
        choice.override_value = override_value;

        std::vector<IndividualizationChoice> next_trace = trace;

        SplitResult split = split_classes(s1, s2);
        MapOutcome outcome;
        if (split.mismatch) {
            next_trace.push_back(choice);
            outcome.kind = MapOutcome::Kind::not_isomorphic;
            outcome.witness = *std::move(split.mismatch);
            outcome.trace = std::move(next_trace);
            outcome.individualization_rounds = static_cast<int>(outcome.trace.size());
        } else {
            MatchedPartition refined = *std::move(split.partition);
            if (refined.count() <= partition.count())
                throw InvariantError("individualization did not increase the class "
                                     "count");
            choice.stale_diagonals_would_collide =
                side_collides(next_literal.left, refined, true, n) ||
                side_collides(next_literal.right, refined, false, n);
            next_trace.push_back(choice);

            if (refined.count() == n)
                outcome = finish_discrete(ctx, s1, s2, std::move(next_trace));
            else
                outcome = search(ctx, refined, next_literal, next_trace);
        }

        if (outcome.verified())
            return outcome;
        if (!ctx.retry_right)
            return outcome;
        if (!first_failure)
            first_failure = std::move(outcome);
    }
    return *std::move(first_failure);
}

} // namespace

IndividualizeStep individualize_step(const MatchedPartition& partition, int n) {
    const int x = first_multi_class(partition);
    if (x < 0)
        throw InvariantError("individualize_step: all classes are singletons");
    auto [base1, base2] = assign_diagonals(partition, n);
    const auto& cls = partition.classes[static_cast<std::size_t>(x)];
    const int i = cls.left.front();
    const int j = cls.right.front();
    const long override_value = 4L * (partition.count() + 1) * n;

    std::vector<long> d1 = base1.values();
    std::vector<long> d2 = base2.values();
    d1[static_cast<std::size_t>(i)] = override_value;
    d2[static_cast<std::size_t>(j)] = override_value;

    IndividualizeStep step;
    step.left = DiagonalAssignment(std::move(d1));
    step.right = DiagonalAssignment(std::move(d2));
    step.chosen.class_index = x + 1;
    step.chosen.left_vertex = i + 1;
    step.chosen.right_vertex = j + 1;
    step.chosen.override_value = override_value;
    return step;
}

Permutation permutation_from_discrete(const SignatureTable& sig1,
                                      const SignatureTable& sig2) {
    if (sig1.order() != sig2.order())
        throw DimensionError("permutation_from_discrete: table order mismatch");
    const int n = sig1.order();

    auto sorted_order = [n](const SignatureTable& t, const char* which) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&t](int a, int b) { return t.row(a) < t.row(b); });
        for (int r = 1; r < n; ++r)
            if (t.row(order[static_cast<std::size_t>(r - 1)]) ==
                t.row(order[static_cast<std::size_t>(r)]))
                throw InvariantError(std::string("duplicate signature rows in ") +
                                     which + " table: classes are not discrete");
        return order;
    };

    const std::vector<int> order1 = sorted_order(sig1, "left");
    const std::vector<int> order2 = sorted_order(sig2, "right");
    for (int r = 0; r < n; ++r)
        if (sig1.row(order1[static_cast<std::size_t>(r)]) !=
            sig2.row(order2[static_cast<std::size_t>(r)]))
            throw InvariantError("sorted signature rows differ at rank " +
                                 std::to_string(r + 1));

    std::vector<int> image(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        image[static_cast<std::size_t>(order1[static_cast<std::size_t>(r)])] =
            order2[static_cast<std::size_t>(r)];
    return Permutation(std::move(image));
}

MapOutcome construct_isomorphism(const Graph& g, const Graph& h,
                                 const ConstructOptions& options) {
    RefineOutcome refined = refine_fixpoint(g, h);

    MapOutcome out;
    out.refine_history = refined.class_count_history;
    out.work = refined.work;

    if (!refined.stable()) {
        out.kind = MapOutcome::Kind::not_isomorphic;
        out.witness = refined.witness;
        return out;
    }

    const int n = g.order();
    SearchContext ctx{g, h, options.retry_right_candidates, {}};

    MapOutcome result;
    if (refined.partition.count() == n) {
        // Already discrete; rebuild the final iteration's tables (the same
        // classes yield the same diagonals, hence the same tables).
        auto [d1, d2] = assign_diagonals(refined.partition, n);
        SignatureTable s1 = signature_table(embed_with_diagonal(g, d1), &ctx.work);
        SignatureTable s2 = signature_table(embed_with_diagonal(h, d2), &ctx.work);
        result = finish_discrete(ctx, s1, s2, {});
    } else {
        auto [lit1, lit2] = assign_diagonals(refined.partition, n);
        LiteralDiagonals literal{lit1.values(), lit2.values()};
        result = search(ctx, refined.partition, literal, {});
    }

    result.refine_history = std::move(out.refine_history);
    result.work = out.work;
    result.work.absorb(ctx.work);
    return result;
}

} // namespace speciso
