#ifndef SPECISO_BIGMAT_HPP
#define SPECISO_BIGMAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "speciso/graph.hpp"

namespace speciso {

/// Dense symmetric matrix of exact unbounded nonnegative integers.
/// Symmetry is maintained by construction: set() writes both mirror
/// entries. Entries of B^k reach hundreds of bits even at modest n, so
/// nothing on this path may ever round or wrap.
class BigSymMatrix {
public:
    BigSymMatrix() = default;
    explicit BigSymMatrix(int n);

    static BigSymMatrix identity(int n);

    int dim() const { return n_; }

    const mpz_class& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                        static_cast<std::size_t>(j)];
    }

    /// Sets (i,j) and (j,i). Rejects negative values.
    void set(int i, int j, mpz_class value);

    mpz_class max_entry() const;

    bool operator==(const BigSymMatrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

private:
    friend BigSymMatrix multiply(const BigSymMatrix&, const BigSymMatrix&);

    int n_ = 0;
    std::vector<mpz_class> entries_; // row-major, both triangles stored
};

/// Per-vertex diagonal values d_i for the perturbed matrix B = A + D.
/// Construction enforces the preconditions the refinement argument needs:
/// d_i > n-1 for every i, and distinct values at least 4n apart.
class DiagonalAssignment {
public:
    DiagonalAssignment() = default;
    explicit DiagonalAssignment(std::vector<long> values);

    int size() const { return static_cast<int>(values_.size()); }
    long value(int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<long>& values() const { return values_; }

    bool operator==(const DiagonalAssignment& other) const = default;

private:
    std::vector<long> values_;
};

/// B = A + D: adjacency off-diagonal, d_i on the diagonal.
BigSymMatrix embed_with_diagonal(const Graph& g, const DiagonalAssignment& d);

/// Exact product. The engine only multiplies commuting matrices (powers of
/// one B), whose product is symmetric; that invariant is asserted on the
/// result and a violation throws InvariantError.
BigSymMatrix multiply(const BigSymMatrix& a, const BigSymMatrix& b);

/// Work accounting for reports and bound checks.
struct PowerStats {
    unsigned long matrix_multiplications = 0;
    mpz_class max_entry{0};

    void absorb(const PowerStats& other);
};

/// Row i holds (||B^1 e_i||^2, ..., ||B^n e_i||^2): for each vertex the
/// squared Euclidean norms of its column across all powers up to n.
/// Rows compare lexicographically with k ascending.
class SignatureTable {
public:
    SignatureTable() = default;
    SignatureTable(int n, std::vector<std::vector<mpz_class>> rows);

    int order() const { return n_; }
    const std::vector<mpz_class>& row(int i) const {
        return rows_[static_cast<std::size_t>(i)];
    }

    bool operator==(const SignatureTable& other) const = default;

private:
    int n_ = 0;
    std::vector<std::vector<mpz_class>> rows_;
};

/// Computes the signature table by iterated multiplication B, B^2, ..., B^n,
/// accumulating each squared column norm as soon as its power is available.
/// Only B and the running power are retained. Optional stats collect the
/// multiplication count and the largest entry seen in any power.
SignatureTable signature_table(const BigSymMatrix& b, PowerStats* stats = nullptr);

} // namespace speciso

#endif
