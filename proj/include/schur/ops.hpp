#pragma once

// Operators on Schur expansions: Pieri multiplication U_(k), the column
// skewing operator D_(1^j), the power-sum adjoint p_k^perp with its
// border-strip cross-check, and the base-free operator
// Gamma_1 = (sum_i U_(i)) (sum_j (-1)^j D_(1^j)).

#include "schur/expansion.hpp"

#include <vector>

namespace schur {

/// U_(k): every term s_lambda becomes the sum of s_mu over horizontal
/// k-strip additions mu of lambda.
SchurExpansion multiply_h(const SchurExpansion& expansion, long long k);

/// D_(1^j): every term s_lambda becomes the sum of s_mu over vertical
/// j-strip removals mu of lambda (dual Pieri).
SchurExpansion skew_column(const SchurExpansion& expansion, long long j);

/// p_i^perp s_alpha: subtract i from one part of alpha in every possible
/// way, straighten each sequence, and sum the signed results.
SchurExpansion p_perp(long long i, const Partition& alpha);

/// Result of removing one border strip: the remaining shape and the number
/// of rows the strip touches.
struct BorderStrip {
    Partition remainder;
    long long height = 0;
};

/// All border strips (edge-connected skew shapes with no 2x2 square) of the
/// given size removable from alpha, found by walking row windows of the rim.
/// Deliberately shares no code with the straightening route.
std::vector<BorderStrip> border_strip_removals(const Partition& alpha, long long size);

/// Murnaghan-Nakayama form of p_i^perp: sum over removable border strips of
/// size i of (-1)^(height-1) s_(alpha minus strip). Independent of p_perp.
SchurExpansion murnaghan_nakayama_perp(long long i, const Partition& alpha);

/// sum_{i>=0} sum_{j>=0} (-1)^j U_(i) D_(1^j) s_alpha, truncated to output
/// degrees <= max_degree. j ranges over 0..length(alpha); i over
/// 0..max_degree (overshoot is discarded by the truncation).
GradedExpansion gamma_one(const Partition& alpha, long long max_degree);

} // namespace schur
