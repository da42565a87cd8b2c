#include "speciso/bigmat.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <utility>

namespace speciso {

BigSymMatrix::BigSymMatrix(int n) : n_(n) {
    if (n < 0)
        throw InvariantError("matrix dimension must be nonnegative");
    entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                    mpz_class(0));
}

BigSymMatrix BigSymMatrix::identity(int n) {
    BigSymMatrix m(n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

void BigSymMatrix::set(int i, int j, mpz_class value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DimensionError("matrix index out of range");
    if (value < 0)
        throw InvariantError("matrix entries must be nonnegative");
    entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(j)] = value;
    entries_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) +
             static_cast<std::size_t>(i)] = std::move(value);
}

mpz_class BigSymMatrix::max_entry() const {
    mpz_class best(0);
    for (const mpz_class& e : entries_)
        if (e > best)
            best = e;
    return best;
}

DiagonalAssignment::DiagonalAssignment(std::vector<long> values)
    : values_(std::move(values)) {
    const long n = static_cast<long>(values_.size());
    std::vector<long> distinct = values_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (long d : distinct)
        if (d <= n - 1)
            throw InvariantError("diagonal value " + std::to_string(d) +
                                 " violates d_i > n-1 with n=" + std::to_string(n));
    for (std::size_t i = 1; i < distinct.size(); ++i)
        if (distinct[i] - distinct[i - 1] < 4 * n)
            throw InvariantError("distinct diagonal values " +
                                 std::to_string(distinct[i - 1]) + " and " +
                                 std::to_string(distinct[i]) +
                                 " closer than 4n=" + std::to_string(4 * n));
}

BigSymMatrix embed_with_diagonal(const Graph& g, const DiagonalAssignment& d) {
    if (g.order() != d.size())
        throw DimensionError("embed_with_diagonal: diagonal size " +
                             std::to_string(d.size()) + " != graph order " +
                             std::to_string(g.order()));
    BigSymMatrix b(g.order());
    for (int i = 0; i < g.order(); ++i) {
        b.set(i, i, d.value(i));
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j))
                b.set(i, j, 1);
    }
    return b;
}

namespace {

// Rows [begin, end) of out = a * b, each inner sum in fixed k order so the
// result is bit-identical regardless of how rows are distributed.
void multiply_rows(const BigSymMatrix& a, const BigSymMatrix& b,
                   std::vector<mpz_class>& out, int begin, int end) {
    const int n = a.dim();
    for (int i = begin; i < end; ++i) {
        for (int j = 0; j < n; ++j) {
            mpz_class& acc =
                out[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
            acc = 0;
            for (int k = 0; k < n; ++k)
                acc += a.at(i, k) * b.at(k, j); // mpz addmul, no temporaries
        }
    }
}

} // namespace

BigSymMatrix multiply(const BigSymMatrix& a, const BigSymMatrix& b) {
    if (a.dim() != b.dim())
        throw DimensionError("multiply: dimension mismatch " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
    const int n = a.dim();
    BigSymMatrix out(n);

    const unsigned hw = std::thread::hardware_concurrency();
    const int threads =
        (n >= 24 && hw > 1) ? static_cast<int>(std::min<unsigned>(hw, 8)) : 1;
    if (threads <= 1) {
        multiply_rows(a, b, out.entries_, 0, n);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int begin = t * chunk;
            const int end = std::min(n, begin + chunk);
            if (begin >= end)
                break;
            pool.emplace_back([&, begin, end] { multiply_rows(a, b, out.entries_, begin, end); });
        }
        for (std::thread& th : pool)
            th.join();
    }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (out.at(i, j) != out.at(j, i))
                throw InvariantError("product is not symmetric: the factors do not "
                                     "commute");
    return out;
}

void PowerStats::absorb(const PowerStats& other) {
    matrix_multiplications += other.matrix_multiplications;
    if (other.max_entry > max_entry)
        max_entry = other.max_entry;
}

SignatureTable signature_table(const BigSymMatrix& b, PowerStats* stats) {
    const int n = b.dim();
    std::vector<std::vector<mpz_class>> rows(
        static_cast<std::size_t>(n),
        std::vector<mpz_class>(static_cast<std::size_t>(n)));

    BigSymMatrix power = b;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            power = multiply(power, b);
            if (stats)
                ++stats->matrix_multiplications;
        }
        if (stats) {
            mpz_class top = power.max_entry();
            if (top > stats->max_entry)
                stats->max_entry = std::move(top);
        }
        for (int i = 0; i < n; ++i) {
            mpz_class& cell = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)];
            cell = 0;
            for (int j = 0; j < n; ++j)
                cell += power.at(j, i) * power.at(j, i);
            if (cell <= 0)
                throw InvariantError("squared column norm must be positive; "
                                     "matrix was not built by embed_with_diagonal");
        }
    }
    return SignatureTable(n, std::move(rows));
}

SignatureTable::SignatureTable(int n, std::vector<std::vector<mpz_class>> rows)
    : n_(n), rows_(std::move(rows)) {
    if (rows_.size() != static_cast<std::size_t>(n_))
        throw DimensionError("signature table must have n rows");
    for (const auto& r : rows_)
        if (r.size() != static_cast<std::size_t>(n_))
            throw DimensionError("signature rows must have n entries");
}

} // namespace speciso
