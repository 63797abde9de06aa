#pragma once

// Brute-force tableau enumeration and classical symmetric-function
// expansions into concrete monomials. Every function here is an oracle:
// simple, exhaustive, and independent of the straightening code paths.

#include "schur/monomial.hpp"
#include "schur/partition.hpp"

#include <utility>
#include <vector>

namespace schur {

/// Alphabet with p positive letters 1..p and q negative letters -1..-q.
/// Negative letters sort below positive ones, ties by absolute value:
/// -1 < -2 < ... < -q < 1 < 2 < ... < p. Positive letter a maps to
/// variable a-1, negative letter -a to variable p + a - 1, so the
/// expansions below live in p + q variables.
struct AlphabetSpec {
    int p = 0;
    int q = 0;

    int size() const { return p + q; }
};

/// A filling of the Young diagram of a partition by signed letters,
/// stored row-major as the letters themselves (never 0).
struct SignedTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    /// (-1)^(number of negative entries).
    int sign() const;
    /// The signed content monomial: x_a per positive letter a, -y_a per
    /// negative letter -a. Arity spec.size().
    MonomialPolynomial weight(const AlphabetSpec& spec) const;
};

/// s_lambda[x_1..x_p] by enumerating semistandard tableaux with entries
/// in 1..p: weakly increasing rows, strictly increasing columns. Zero
/// when length(lambda) > p. Arity p.
MonomialPolynomial ssyt_expand(const Partition& lambda, int p);

/// All fillings of the shape by the signed alphabet: rows and columns
/// weakly increase, columns are strict on positive letters, rows are
/// strict on negative letters.
std::vector<SignedTableau> signed_tableaux(const Partition& shape, const AlphabetSpec& spec);

/// Signed generating function of signed_tableaux: positive letter a
/// contributes x_a, negative letter -a contributes -y_a. Equals
/// s_lambda[X - Y]. Arity spec.size().
MonomialPolynomial signed_tableaux_expand(const Partition& shape, const AlphabetSpec& spec);

/// Complete homogeneous, elementary, and power sums in x_1..x_p, arity p.
/// Negative k gives zero and h_0 = e_0 = 1; p_expand requires k >= 1.
MonomialPolynomial h_expand(long long k, int p);
MonomialPolynomial e_expand(long long k, int p);
MonomialPolynomial p_expand(long long k, int p);

/// h_k[X - Y] = sum_j (-1)^j h_{k-j}[X] e_j[Y] with X = x_1..x_p at
/// variables 0..p-1 and Y = y_1..y_q at variables p..p+q-1. Zero for
/// k < 0. Arity spec.size().
MonomialPolynomial h_difference_expand(long long k, const AlphabetSpec& spec);

/// det(h_{seq_i + j - i}[X - Y]) by division-free cofactor expansion,
/// memoized on column subsets. With q = 0 this is the Jacobi-Trudi
/// determinant over X alone. A nonnegative truncate_degree drops every
/// graded piece beyond it (each cofactor is homogeneous, so whole
/// subproducts are kept or skipped); -1 computes the exact determinant.
MonomialPolynomial jt_determinant_expand(const IntegerSequence& seq, const AlphabetSpec& spec,
                                         long long truncate_degree = -1);

/// Both sides of the Cauchy identity prod 1/(1 - x_i y_j), x-variables at
/// 0..p-1 and y-variables at p..p+q-1: the kernel expanded by geometric
/// series truncated to total degree <= 2d, and
/// sum_{|lambda| <= d} s_lambda[X] s_lambda[Y]. Every monomial on either
/// side has equal x- and y-degree, so the two truncations line up and the
/// pair is equal exactly.
std::pair<MonomialPolynomial, MonomialPolynomial> cauchy_truncated(int p, int q, int d);

/// Both sides of the dual Cauchy identity: the exact product
/// prod (1 - x_i y_j), and the exact sum over lambda in the q x p box of
/// (-1)^|lambda| s_lambda'[X] s_lambda[Y]. Both are polynomials, so no
/// truncation is involved.
std::pair<MonomialPolynomial, MonomialPolynomial> dual_cauchy_truncated(int p, int q);

/// Checks sigma[X + Y] = sigma[X] sigma[Y]: h_k in p1 + p2 variables
/// against sum_j h_j(first p1) h_{k-j}(last p2), for every k <= d.
bool sigma_additivity_check(int p1, int p2, int d);

/// Treats u = 1/t as a single negative letter: compares
/// signed_tableaux_expand(alpha, {p, 1}) against
/// sum_k (-u)^k sum_{lambda: alpha/lambda vertical k-strip}
/// ssyt_expand(lambda, p), keeping u-degree <= d_t on both sides. With
/// d_t >= length(alpha) this is exact equality.
bool negative_alphabet_corollary_check(const Partition& alpha, int p, int d_t);

} // namespace schur
