#include "speciso/refine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace speciso {

MatchedPartition MatchedPartition::single_class(int n) {
    MatchedPartition p;
    p.order = n;
    if (n > 0) {
        ClassPair all;
        all.left.resize(static_cast<std::size_t>(n));
        std::iota(all.left.begin(), all.left.end(), 0);
        all.right = all.left;
        p.classes.push_back(std::move(all));
    }
    return p;
}

void MatchedPartition::validate() const {
    std::vector<char> seen_left(static_cast<std::size_t>(order), 0);
    std::vector<char> seen_right(static_cast<std::size_t>(order), 0);
    for (const ClassPair& cp : classes) {
        if (cp.left.size() != cp.right.size())
            throw InvariantError("matched classes must have equal sizes");
        if (cp.left.empty())
            throw InvariantError("empty class in partition");
        for (int v : cp.left) {
            if (v < 0 || v >= order || seen_left[static_cast<std::size_t>(v)])
                throw InvariantError("left classes do not partition the vertices");
            seen_left[static_cast<std::size_t>(v)] = 1;
        }
        for (int v : cp.right) {
            if (v < 0 || v >= order || seen_right[static_cast<std::size_t>(v)])
                throw InvariantError("right classes do not partition the vertices");
            seen_right[static_cast<std::size_t>(v)] = 1;
        }
    }
    for (int v = 0; v < order; ++v)
        if (!seen_left[static_cast<std::size_t>(v)] ||
            !seen_right[static_cast<std::size_t>(v)])
            throw InvariantError("partition misses vertex " + std::to_string(v + 1));
}

std::pair<DiagonalAssignment, DiagonalAssignment>
assign_diagonals(const MatchedPartition& partition, int n) {
    if (partition.order != n)
        throw DimensionError("assign_diagonals: partition order mismatch");
    std::vector<long> d1(static_cast<std::size_t>(n), 0);
    std::vector<long> d2(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < partition.count(); ++x) {
        const long value = 4L * n * (x + 1);
        for (int v : partition.classes[static_cast<std::size_t>(x)].left)
            d1[static_cast<std::size_t>(v)] = value;
        for (int v : partition.classes[static_cast<std::size_t>(x)].right)
            d2[static_cast<std::size_t>(v)] = value;
    }
    return {DiagonalAssignment(std::move(d1)), DiagonalAssignment(std::move(d2))};
}

SplitResult split_classes(const SignatureTable& sig1, const SignatureTable& sig2) {
    if (sig1.order() != sig2.order())
        throw DimensionError("split_classes: table order mismatch");
    const int n = sig1.order();

    auto sorted_by_row = [n](const SignatureTable& t) {
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&t](int a, int b) {
            const auto& ra = t.row(a);
            const auto& rb = t.row(b);
            if (ra != rb)
                return ra < rb; // lexicographic, k ascending
            return a < b;
        });
        return order;
    };

    const std::vector<int> order1 = sorted_by_row(sig1);
    const std::vector<int> order2 = sorted_by_row(sig2);

    for (int r = 0; r < n; ++r) {
        const auto& row1 = sig1.row(order1[static_cast<std::size_t>(r)]);
        const auto& row2 = sig2.row(order2[static_cast<std::size_t>(r)]);
        if (row1 == row2)
            continue;
        Witness w;
        w.kind = Witness::Kind::signature_mismatch;
        w.rank = r + 1;
        for (int k = 0; k < n; ++k) {
            if (row1[static_cast<std::size_t>(k)] != row2[static_cast<std::size_t>(k)]) {
                w.k = k + 1;
                w.lhs = row1[static_cast<std::size_t>(k)];
                w.rhs = row2[static_cast<std::size_t>(k)];
                break;
            }
        }
        return {std::nullopt, std::move(w)};
    }

    // Sorted row sequences are equal; group ranks with identical rows.
    MatchedPartition partition;
    partition.order = n;
    int r = 0;
    while (r < n) {
        int end = r + 1;
        const auto& row = sig1.row(order1[static_cast<std::size_t>(r)]);
        while (end < n && sig1.row(order1[static_cast<std::size_t>(end)]) == row)
            ++end;
        MatchedPartition::ClassPair cp;
        for (int i = r; i < end; ++i) {
            cp.left.push_back(order1[static_cast<std::size_t>(i)]);
            cp.right.push_back(order2[static_cast<std::size_t>(i)]);
        }
        std::sort(cp.left.begin(), cp.left.end());
        std::sort(cp.right.begin(), cp.right.end());
        partition.classes.push_back(std::move(cp));
        r = end;
    }
    partition.validate();
    return {std::move(partition), std::nullopt};
}

RefineOutcome refine_fixpoint(const Graph& g, const Graph& h) {
    RefineOutcome out;

    if (g.order() != h.order()) {
        out.kind = RefineOutcome::Kind::not_isomorphic;
        out.witness.kind = Witness::Kind::size_mismatch;
        return out;
    }
    // Unequal edge counts are not short-circuited: they always surface as a
    // k=1 signature mismatch (degree multisets differ), and the witness
    // should say so.

    const int n = g.order();
    MatchedPartition partition = MatchedPartition::single_class(n);

    if (n == 0) {
        // Two empty graphs are isomorphic; nothing to refine.
        out.kind = RefineOutcome::Kind::stable;
        out.partition = std::move(partition);
        out.class_count_history.push_back(0);
        return out;
    }

    for (;;) {
        const int count_before = partition.count();
        auto [d1, d2] = assign_diagonals(partition, n);
        SignatureTable s1 = signature_table(embed_with_diagonal(g, d1), &out.work);
        SignatureTable s2 = signature_table(embed_with_diagonal(h, d2), &out.work);
        ++out.iterations;

        SplitResult split = split_classes(s1, s2);
        if (split.mismatch) {
            out.kind = RefineOutcome::Kind::not_isomorphic;
            out.witness = *std::move(split.mismatch);
            return out;
        }
        partition = *std::move(split.partition);
        out.class_count_history.push_back(partition.count());

        if (partition.count() < count_before)
            throw InvariantError("refinement merged classes; this cannot happen");
        if (partition.count() == count_before)
            break; // fixed point: the iteration created no new classes
        if (out.iterations > n)
            throw InvariantError("refinement exceeded n iterations");
    }

    out.kind = RefineOutcome::Kind::stable;
    out.partition = std::move(partition);
    return out;
}

} // namespace speciso
