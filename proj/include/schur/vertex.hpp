#pragma once

// The vertex operator Gamma_(t|X) s_alpha computed three independent ways
// over a caller-supplied exponent window, together with the executable
// sign-reversing involution that cancels the raw right-hand side term by
// term onto the surviving Schur functions.

#include "schur/expansion.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schur {

/// Window of a Laurent series in t: one SchurExpansion per exponent n in
/// [n_min, n_max]. Every key of coefficients[n] has weight |alpha| + n, and
/// the expansion is empty for all n < -length(alpha). The series is
/// infinite above, so nothing is claimed outside the window.
struct VertexSeries {
    Partition alpha;
    long long n_min = 0;
    long long n_max = 0;
    std::map<long long, SchurExpansion> coefficients;

    const SchurExpansion& at(long long n) const;

    friend bool operator==(const VertexSeries& a, const VertexSeries& b) = default;
};

/// One uncancelled summand of sigma[tX] * s_alpha[X - 1/t]: a vertical
/// j-strip removal alpha -> lambda followed by a horizontal (n+j)-strip
/// addition lambda -> mu, carrying sign (-1)^j and t-exponent
/// n = |mu| - |alpha|.
struct RawTerm {
    long long j = 0;
    Partition lambda;
    Partition mu;
    long long n = 0;
    int sign = 1;

    friend bool operator==(const RawTerm& a, const RawTerm& b) = default;
};

/// One summand of the direct description of Gamma_(t|X) s_alpha: fixing
/// k >= 0, add a cell atop each of columns 1..k of alpha and remove the
/// last cell of every row with alpha_i > k. ht counts the removed cells;
/// n = k - ht and the sign is (-1)^ht.
struct LemmaTerm {
    long long k = 0;
    long long n = 0;
    int sign = 1;
    Partition mu;
    long long ht = 0;

    friend bool operator==(const LemmaTerm& a, const LemmaTerm& b) = default;
};

/// Outcome of cancelling the raw terms of one t-exponent: matched couples
/// (equal mu and n, opposite sign), the corner toggled for each couple, and
/// the fixed points that survive.
struct InvolutionReport {
    Partition alpha;
    long long n = 0;
    std::vector<std::pair<RawTerm, RawTerm>> paired;
    std::vector<Cell> corner_used; // parallel to paired
    std::vector<RawTerm> survivors;
};

/// Raised when a cross-checked identity fails to hold.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Straightening route: coefficients[n] = rectification of (n, alpha).
VertexSeries vertex_lhs(const Partition& alpha, long long n_min, long long n_max);

/// All lemma terms with n <= n_max, in increasing k. Exactly one term per
/// n >= -length(alpha); n is strictly increasing in k (asserted).
std::vector<LemmaTerm> vertex_lemma_terms(const Partition& alpha, long long n_max);

/// Direct-description route, windowed like vertex_lhs.
VertexSeries vertex_lemma(const Partition& alpha, long long n_min, long long n_max);

/// Every RawTerm with n in the window, enumerated by n, then increasing j,
/// then the deterministic orders of the two strip enumerations. This is
/// sigma[tX] * s_alpha[X - 1/t] before cancellation.
std::vector<RawTerm> vertex_rhs_raw(const Partition& alpha, long long n_min, long long n_max);

/// Product route: the signed sum of vertex_rhs_raw grouped by n and mu.
VertexSeries vertex_rhs(const Partition& alpha, long long n_min, long long n_max);

/// The sign-reversing involution. Returns the partner obtained by toggling
/// lambda at the leftmost alpha-removable corner of (alpha, mu) - same mu
/// and n, opposite sign - or nullopt when the term is a fixed point.
/// Throws std::invalid_argument when the term's strip invariants fail.
std::optional<RawTerm> pair_term(const Partition& alpha, const RawTerm& term);

/// Runs pair_term over vertex_rhs_raw(alpha, n, n) and validates the
/// outcome: couples must preserve mu and n and reverse sign, and survivors
/// must coincide exactly (shape and sign) with the lemma enumeration.
/// Throws VerificationError naming the offending term otherwise.
InvolutionReport involution_report(const Partition& alpha, long long n);

} // namespace schur
