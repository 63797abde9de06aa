#pragma once

// Integer linear combinations of Schur functions, keyed by canonical
// partitions, plus the graded variant used by degree-mixing operators.

#include "schur/partition.hpp"
#include "schur/straighten.hpp"

#include <map>

namespace schur {

/// Finite map Partition -> nonzero integer coefficient. Terms iterate in
/// lexicographically decreasing partition order. Inserting a net zero
/// coefficient deletes the key, so equality is structural equality.
class SchurExpansion {
  public:
    using TermMap = std::map<Partition, long long, LexGreater>;

    SchurExpansion() = default;

    static SchurExpansion single(const Partition& p, long long coeff = 1);

    /// The empty expansion for Zero, otherwise sign * s_partition.
    static SchurExpansion from_straightening(const StraighteningResult& r);

    void add(const Partition& p, long long coeff);

    long long coefficient(const Partition& p) const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    SchurExpansion& operator+=(const SchurExpansion& other);
    SchurExpansion& operator-=(const SchurExpansion& other);
    friend SchurExpansion operator+(SchurExpansion a, const SchurExpansion& b)
    {
        a += b;
        return a;
    }
    friend SchurExpansion operator-(SchurExpansion a, const SchurExpansion& b)
    {
        a -= b;
        return a;
    }
    SchurExpansion operator-() const { return scaled(-1); }
    SchurExpansion scaled(long long c) const;

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) = default;

  private:
    TermMap terms_;
};

/// Finite map degree -> homogeneous SchurExpansion of that degree. Degrees
/// with an empty piece are not stored.
class GradedExpansion {
  public:
    using PieceMap = std::map<long long, SchurExpansion>;

    void add_piece(long long degree, const SchurExpansion& piece);

    /// Empty expansion when the degree is absent (including negative degrees).
    const SchurExpansion& piece(long long degree) const;

    const PieceMap& pieces() const { return pieces_; }

    friend bool operator==(const GradedExpansion& a, const GradedExpansion& b) = default;

  private:
    PieceMap pieces_;
};

} // namespace schur
