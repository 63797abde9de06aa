#pragma once

// Integer partitions, arbitrary integer sequences, strip enumeration and the
// removable-corner computation used by the cancellation involution.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

// Checked 64-bit arithmetic for part sizes, weights and coefficients.
// Throws std::overflow_error; inputs at the scale this library targets
// never get close, so a throw always indicates misuse.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Weakly decreasing tuple of nonnegative integers, stored canonically
/// (no trailing zeros). The empty partition is the empty tuple.
class Partition {
  public:
    Partition() = default;

    /// Validates: strips trailing zeros, then requires nonnegative and
    /// weakly decreasing parts. Throws std::invalid_argument naming the
    /// offending 1-based index otherwise.
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// 1-based row access; rows past the end have size 0.
    long long part(std::size_t row) const
    {
        return (row >= 1 && row <= parts_.size()) ? parts_[row - 1] : 0;
    }

    long long weight() const;
    Partition conjugate() const;
    bool contains(const Partition& other) const;

    friend bool operator==(const Partition& a, const Partition& b) = default;

  private:
    std::vector<long long> parts_;
};

/// Lexicographically-decreasing order on partitions; the iteration order of
/// every expansion and strip list in this library.
struct LexGreater {
    bool operator()(const Partition& a, const Partition& b) const
    {
        return a.parts() > b.parts();
    }
};

/// Arbitrary integer tuple indexing a Jacobi-Trudi determinant. Entries are
/// unrestricted in sign and order.
struct IntegerSequence {
    std::vector<long long> parts;

    IntegerSequence() = default;
    explicit IntegerSequence(std::vector<long long> p) : parts(std::move(p)) {}

    std::size_t length() const { return parts.size(); }
    long long sum() const;

    friend bool operator==(const IntegerSequence& a, const IntegerSequence& b) = default;
};

/// Sequence (n, alpha_1, ..., alpha_l).
IntegerSequence prepended(long long n, const Partition& alpha);

/// Cell of a diagram, 1-based. Rows are ordered alpha_1 >= alpha_2 >= ...;
/// "on top of row i" means row i+1.
struct Cell {
    long long row = 0;
    long long column = 0;

    friend bool operator==(const Cell& a, const Cell& b) = default;
};

Partition make_partition(const std::vector<long long>& parts);

/// All partitions lambda inside alpha with |alpha| - |lambda| = k such that
/// alpha/lambda has at most one cell per row. Lexicographically decreasing.
std::vector<Partition> vertical_strip_removals(const Partition& alpha, long long k);

/// All partitions mu containing lambda with |mu| - |lambda| = k such that
/// mu/lambda has at most one cell per column (interlacing
/// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...). Lexicographically decreasing.
std::vector<Partition> horizontal_strip_additions(const Partition& lambda, long long k);

/// Cells c = (i, alpha_i) with mu_i >= alpha_i (no removed cell of alpha to
/// the right) and mu_{i+1} < alpha_i (no cell of mu on top), sorted by
/// increasing column. Distinct cells always sit in distinct columns, so
/// "leftmost" is unambiguous.
std::vector<Cell> alpha_removable_corners(const Partition& alpha, const Partition& mu);

/// All partitions of weight w, lexicographically decreasing.
std::vector<Partition> partitions_of_weight(long long w);

/// All partitions of weight 0..w, by weight then lexicographically decreasing.
std::vector<Partition> partitions_up_to_weight(long long w);

} // namespace schur
