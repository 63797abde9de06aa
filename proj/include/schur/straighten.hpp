#pragma once

// Straightening (rectification) of Jacobi-Trudi indices: any integer
// sequence reduces to zero or to a sign times a partition-indexed Schur
// function. Two independent algorithms with identical contracts.

#include "schur/partition.hpp"

namespace schur {

/// Zero, or (sign, partition). Zero is a distinguished state rather than a
/// sign of 0, so callers cannot accidentally multiply by it.
class StraighteningResult {
  public:
    static StraighteningResult zero() { return StraighteningResult(); }
    static StraighteningResult signed_partition(int sign, Partition p);

    bool is_zero() const { return zero_; }
    int sign() const;
    const Partition& partition() const;

    friend bool operator==(const StraighteningResult& a, const StraighteningResult& b) = default;

  private:
    StraighteningResult() = default;

    bool zero_ = true;
    int sign_ = 0;
    Partition partition_;
};

/// Staircase route: add delta = (l-1, ..., 1, 0), sort strictly decreasing
/// tracking the permutation sign, subtract delta back. A negative or
/// repeated entry after the shift means the determinant vanishes.
StraighteningResult staircase_straighten(const IntegerSequence& seq);

/// Row-exchange route: while some adjacent pair has a < b, replace (a, b)
/// by (b-1, a+1) and flip the sign. b = a+1 is a fixed point of the
/// exchange (repeated determinant row) and yields zero, as does a sorted
/// sequence with a negative part.
StraighteningResult row_exchange_straighten(const IntegerSequence& seq);

} // namespace schur
