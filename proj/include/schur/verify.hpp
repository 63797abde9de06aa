#pragma once

// Property sweeps over bounded families of inputs. Each sweep counts the
// cases it checked and collects up to 20 failing-case descriptions; a
// sweep never throws on a mere identity failure, only on internal errors.

#include "schur/partition.hpp"

#include <string>
#include <vector>

namespace schur {

struct SweepResult {
    long long cases = 0;
    long long failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
    void check(bool passed, const std::string& description);
    SweepResult& merge(const SweepResult& other);
};

/// staircase_straighten == row_exchange_straighten, plus weight
/// conservation of signed results: exhaustively for length <= 3 with
/// entries in [-max_weight, max_weight + 2], then `random_cases` seeded
/// random sequences of length <= 6 with entries in [-6, 8].
SweepResult sweep_straighten_agreement(long long max_weight, long long random_cases = 100000);

/// vertex_lhs == vertex_lemma == vertex_rhs for every alpha, over the
/// window [max(n_lo, -length(alpha) - 2), n_hi]; also checks the
/// vanishing of every coefficient below -length(alpha) and that each
/// nonempty coefficient is a single term with coefficient +1 or -1.
SweepResult sweep_vertex_three_way(const std::vector<Partition>& alphas,
                                   long long n_lo, long long n_hi);

/// involution_report for every alpha and every n in the clamped window;
/// a VerificationError is a failure, not a throw.
SweepResult sweep_involution_soundness(const std::vector<Partition>& alphas,
                                       long long n_lo, long long n_hi);

/// p_perp(i, alpha) == murnaghan_nakayama_perp(i, alpha) for 1 <= i <= max_i.
SweepResult sweep_perp_agreement(const std::vector<Partition>& alphas, long long max_i);

/// gamma_one(alpha, |alpha| + extra_degree) piece by piece against the
/// straightening of (n, alpha), for -length(alpha) - 1 <= n <= extra_degree.
SweepResult sweep_gamma_one(const std::vector<Partition>& alphas, long long extra_degree);

/// jt_determinant_expand truncated at max_degree vs sign * ssyt_expand
/// at q = 0, for every sequence of length <= 4 with entries in [-4, 6];
/// past the truncation degree both sides vanish identically.
SweepResult check_jt_vs_ssyt(int p, long long max_degree);

/// signed_tableaux_expand(lambda) == jt_determinant_expand(lambda) over
/// X - Y, for every |lambda| <= max_weight.
SweepResult check_schur_diff(int p, int q, long long max_weight);

/// Equality of the two sides returned by the kernel expansions.
SweepResult check_cauchy(int p, int q, int d);
SweepResult check_dual_cauchy(int p, int q);
SweepResult check_sigma_add(int p1, int p2, int d);

/// negative_alphabet_corollary_check(alpha, p, length(alpha)) for every
/// |alpha| <= max_weight (d_t = length makes the comparison exact).
SweepResult check_neg_alphabet(int p, long long max_weight);

/// For every |alpha| <= max_weight and n in [-length(alpha), n_hi]: the
/// ssyt expansion of the vertex_lhs coefficient at t^n equals
/// sum_k h_{n+k}[x] * (u^k coefficient of s_alpha[X - u]), the latter
/// taken from signed_tableaux_expand with one negative letter.
SweepResult check_vertex_monomial(int p, long long max_weight, long long n_hi = 4);

} // namespace schur
