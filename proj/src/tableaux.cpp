#include "schur/tableaux.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace schur {

namespace {

// Letters are ranked by the total order -1 < -2 < ... < -q < 1 < ... < p:
// rank r < q is the negative letter -(r+1), rank r >= q the positive
// letter r - q + 1. Negative rank r maps to variable p + r, positive rank
// r to variable r - q.

int rank_to_variable(int rank, const AlphabetSpec& spec)
{
    return rank < spec.q ? spec.p + rank : rank - spec.q;
}

int letter_to_rank(int letter, const AlphabetSpec& spec)
{
    if (letter < 0 && -letter <= spec.q)
        return -letter - 1;
    if (letter > 0 && letter <= spec.p)
        return spec.q + letter - 1;
    throw std::invalid_argument("letter " + std::to_string(letter) +
                                " outside the alphabet");
}

/// Row-major DFS over all signed fillings; calls sink(grid) per tableau.
void enumerate_signed(const Partition& shape, const AlphabetSpec& spec,
                      const std::function<void(const std::vector<std::vector<int>>&)>& sink)
{
    const auto& rows = shape.parts();
    const int q = spec.q;
    const int top = spec.size() - 1;
    if (top < 0) {
        if (shape.empty())
            sink({});
        return;
    }
    std::vector<std::vector<int>> grid(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        grid[r].assign(static_cast<std::size_t>(rows[r]), 0);

    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == grid.size()) {
            sink(grid);
            return;
        }
        if (c == grid[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 0;
        if (c > 0) {
            int left = grid[r][c - 1];
            lo = std::max(lo, left < q ? left + 1 : left);
        }
        if (r > 0 && c < grid[r - 1].size()) {
            int up = grid[r - 1][c];
            lo = std::max(lo, up >= q ? up + 1 : up);
        }
        for (int t = lo; t <= top; ++t) {
            grid[r][c] = t;
            fill(r, c + 1);
        }
    };
    fill(0, 0);
}

} // namespace

int SignedTableau::sign() const
{
    long long negatives = 0;
    for (const auto& row : rows)
        for (int letter : row)
            if (letter < 0)
                ++negatives;
    return negatives % 2 == 0 ? 1 : -1;
}

MonomialPolynomial SignedTableau::weight(const AlphabetSpec& spec) const
{
    MonomialPolynomial::Exponents e(static_cast<std::size_t>(spec.size()), 0);
    for (const auto& row : rows)
        for (int letter : row)
            ++e[static_cast<std::size_t>(rank_to_variable(letter_to_rank(letter, spec), spec))];
    MonomialPolynomial out(spec.size());
    out.add_term(e, sign());
    return out;
}

MonomialPolynomial ssyt_expand(const Partition& lambda, int p)
{
    if (p < 0)
        throw std::invalid_argument("letter count is negative");
    MonomialPolynomial out(p);
    if (static_cast<long long>(lambda.length()) > p)
        return out;
    const auto& rows = lambda.parts();
    if (rows.empty()) {
        out.add_term(MonomialPolynomial::Exponents(static_cast<std::size_t>(p), 0), 1);
        return out;
    }

    std::vector<std::vector<int>> grid(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        grid[r].assign(static_cast<std::size_t>(rows[r]), 0);
    MonomialPolynomial::Exponents content(static_cast<std::size_t>(p), 0);

    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == grid.size()) {
            out.add_term(content, 1);
            return;
        }
        if (c == grid[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, grid[r][c - 1]);
        if (r > 0 && c < grid[r - 1].size())
            lo = std::max(lo, grid[r - 1][c] + 1);
        for (int t = lo; t <= p; ++t) {
            grid[r][c] = t;
            ++content[static_cast<std::size_t>(t - 1)];
            fill(r, c + 1);
            --content[static_cast<std::size_t>(t - 1)];
        }
    };
    fill(0, 0);
    return out;
}

std::vector<SignedTableau> signed_tableaux(const Partition& shape, const AlphabetSpec& spec)
{
    std::vector<SignedTableau> out;
    enumerate_signed(shape, spec, [&](const std::vector<std::vector<int>>& grid) {
        SignedTableau t;
        t.shape = shape;
        t.rows.resize(grid.size());
        for (std::size_t r = 0; r < grid.size(); ++r) {
            t.rows[r].reserve(grid[r].size());
            for (int rank : grid[r])
                t.rows[r].push_back(rank < spec.q ? -(rank + 1) : rank - spec.q + 1);
        }
        out.push_back(std::move(t));
    });
    return out;
}

MonomialPolynomial signed_tableaux_expand(const Partition& shape, const AlphabetSpec& spec)
{
    const int arity = spec.size();
    MonomialPolynomial out(arity);
    if (shape.empty()) {
        out.add_term(MonomialPolynomial::Exponents(static_cast<std::size_t>(arity), 0), 1);
        return out;
    }

    // Millions of tableaux can collapse onto a few thousand monomials, so
    // the hot path packs the content into one integer (a byte per
    // variable, highest byte first) and defers building exponent vectors
    // until the end. Exponents stay below 256 because each letter repeats
    // at most max(rows, columns) times.
    if (arity >= 1 && arity <= 8 && shape.weight() < 256) {
        const auto& rows = shape.parts();
        const int q = spec.q;
        const int top = arity - 1;
        std::vector<std::vector<int>> grid(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            grid[r].assign(static_cast<std::size_t>(rows[r]), 0);

        std::array<std::uint64_t, 8> unit{};
        for (int t = 0; t <= top; ++t)
            unit[static_cast<std::size_t>(t)] =
                std::uint64_t{1} << (8 * (7 - rank_to_variable(t, spec)));

        std::unordered_map<std::uint64_t, long long> acc;
        acc.reserve(1 << 12);
        std::uint64_t key = 0;
        auto fill = [&](auto&& self, std::size_t r, std::size_t c, int sign) -> void {
            if (r == grid.size()) {
                acc[key] += sign;
                return;
            }
            if (c == grid[r].size()) {
                self(self, r + 1, 0, sign);
                return;
            }
            int lo = 0;
            if (c > 0) {
                int left = grid[r][c - 1];
                lo = std::max(lo, left < q ? left + 1 : left);
            }
            if (r > 0 && c < grid[r - 1].size()) {
                int up = grid[r - 1][c];
                lo = std::max(lo, up >= q ? up + 1 : up);
            }
            for (int t = lo; t <= top; ++t) {
                grid[r][c] = t;
                key += unit[static_cast<std::size_t>(t)];
                self(self, r, c + 1, t < q ? -sign : sign);
                key -= unit[static_cast<std::size_t>(t)];
            }
        };
        fill(fill, 0, 0, 1);

        MonomialPolynomial::Exponents e(static_cast<std::size_t>(arity), 0);
        for (const auto& [packed, coeff] : acc) {
            if (coeff == 0)
                continue;
            for (int v = 0; v < arity; ++v)
                e[static_cast<std::size_t>(v)] =
                    static_cast<int>((packed >> (8 * (7 - v))) & 0xff);
            out.add_term(e, coeff);
        }
        return out;
    }

    MonomialPolynomial::Exponents content(static_cast<std::size_t>(arity), 0);
    enumerate_signed(shape, spec, [&](const std::vector<std::vector<int>>& grid) {
        std::fill(content.begin(), content.end(), 0);
        long long negatives = 0;
        for (const auto& row : grid)
            for (int rank : row) {
                ++content[static_cast<std::size_t>(rank_to_variable(rank, spec))];
                if (rank < spec.q)
                    ++negatives;
            }
        out.add_term(content, negatives % 2 == 0 ? 1 : -1);
    });
    return out;
}

MonomialPolynomial h_expand(long long k, int p)
{
    if (p < 0)
        throw std::invalid_argument("variable count is negative");
    MonomialPolynomial out(p);
    if (k < 0)
        return out;
    MonomialPolynomial::Exponents e(static_cast<std::size_t>(p), 0);
    std::function<void(int, long long)> rec = [&](int var, long long remaining) {
        if (var == p) {
            if (remaining == 0)
                out.add_term(e, 1);
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            e[static_cast<std::size_t>(var)] = static_cast<int>(v);
            rec(var + 1, remaining - v);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    if (p == 0) {
        if (k == 0)
            out.add_term(e, 1);
        return out;
    }
    rec(0, k);
    return out;
}

MonomialPolynomial e_expand(long long k, int p)
{
    if (p < 0)
        throw std::invalid_argument("variable count is negative");
    MonomialPolynomial out(p);
    if (k < 0 || k > p)
        return out;
    MonomialPolynomial::Exponents e(static_cast<std::size_t>(p), 0);
    std::function<void(int, long long)> rec = [&](int var, long long remaining) {
        if (remaining == 0) {
            out.add_term(e, 1);
            return;
        }
        if (var == p || p - var < remaining)
            return;
        e[static_cast<std::size_t>(var)] = 1;
        rec(var + 1, remaining - 1);
        e[static_cast<std::size_t>(var)] = 0;
        rec(var + 1, remaining);
    };
    rec(0, k);
    return out;
}

MonomialPolynomial p_expand(long long k, int p)
{
    if (k < 1)
        throw std::invalid_argument("power sum index must be >= 1");
    if (p < 0)
        throw std::invalid_argument("variable count is negative");
    MonomialPolynomial out(p);
    for (int i = 0; i < p; ++i) {
        MonomialPolynomial::Exponents e(static_cast<std::size_t>(p), 0);
        e[static_cast<std::size_t>(i)] = static_cast<int>(k);
        out.add_term(e, 1);
    }
    return out;
}

MonomialPolynomial h_difference_expand(long long k, const AlphabetSpec& spec)
{
    MonomialPolynomial out(spec.size());
    if (k < 0)
        return out;
    for (long long j = 0; j <= std::min<long long>(k, spec.q); ++j) {
        MonomialPolynomial piece = h_expand(k - j, spec.p).embedded(spec.size(), 0) *
                                   e_expand(j, spec.q).embedded(spec.size(), spec.p);
        out += j % 2 == 0 ? piece : -piece;
    }
    return out;
}

MonomialPolynomial jt_determinant_expand(const IntegerSequence& seq, const AlphabetSpec& spec,
                                         long long truncate_degree)
{
    const int l = static_cast<int>(seq.length());
    const int arity = spec.size();
    if (l > 24)
        throw std::invalid_argument("determinant size exceeds the supported bound of 24");
    if (l == 0)
        return MonomialPolynomial::one(arity);

    std::vector<long long> row_suffix(static_cast<std::size_t>(l) + 1, 0);
    for (int r = l - 1; r >= 0; --r)
        row_suffix[static_cast<std::size_t>(r)] =
            checked_add(row_suffix[static_cast<std::size_t>(r) + 1],
                        seq.parts[static_cast<std::size_t>(r)]);

    std::map<long long, MonomialPolynomial> entry_cache;
    auto entry = [&](long long k) -> const MonomialPolynomial& {
        auto it = entry_cache.find(k);
        if (it == entry_cache.end())
            it = entry_cache.emplace(k, h_difference_expand(k, spec)).first;
        return it->second;
    };

    std::map<unsigned, MonomialPolynomial> memo;
    std::function<const MonomialPolynomial&(unsigned)> det = [&](unsigned mask)
        -> const MonomialPolynomial& {
        auto found = memo.find(mask);
        if (found != memo.end())
            return found->second;

        const int width = __builtin_popcount(mask);
        const int r = l - width;
        MonomialPolynomial acc(arity);

        // Degree of every term of this cofactor: row entries sum to
        // seq_r + column - row over the remaining square block.
        long long degree = row_suffix[static_cast<std::size_t>(r)];
        for (int c = 0; c < l; ++c)
            if (mask & (1u << c))
                degree += c + 1;
        degree -= static_cast<long long>(l) * (l + 1) / 2 -
                  static_cast<long long>(r) * (r + 1) / 2;

        if (degree >= 0 && (truncate_degree < 0 || degree <= truncate_degree)) {
            if (mask == 0) {
                acc = MonomialPolynomial::one(arity);
            } else {
                int position = 0;
                for (int c = 0; c < l; ++c) {
                    if (!(mask & (1u << c)))
                        continue;
                    const MonomialPolynomial& top = entry(seq.parts[static_cast<std::size_t>(r)] + c - r);
                    if (!top.is_zero()) {
                        const MonomialPolynomial& sub = det(mask & ~(1u << c));
                        if (!sub.is_zero()) {
                            MonomialPolynomial prod = top * sub;
                            acc += position % 2 == 0 ? prod : -prod;
                        }
                    }
                    ++position;
                }
            }
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };

    return det((1u << l) - 1u);
}

std::pair<MonomialPolynomial, MonomialPolynomial> cauchy_truncated(int p, int q, int d)
{
    if (p < 1 || q < 1 || d < 0)
        throw std::invalid_argument("cauchy_truncated needs p, q >= 1 and d >= 0");
    const int arity = p + q;

    MonomialPolynomial schur_sum(arity);
    for (const Partition& lambda : partitions_up_to_weight(d)) {
        MonomialPolynomial sx = ssyt_expand(lambda, p);
        if (sx.is_zero())
            continue;
        MonomialPolynomial sy = ssyt_expand(lambda, q);
        if (sy.is_zero())
            continue;
        schur_sum += sx.embedded(arity, 0) * sy.embedded(arity, p);
    }

    MonomialPolynomial kernel = MonomialPolynomial::one(arity);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            MonomialPolynomial factor(arity);
            MonomialPolynomial::Exponents e(static_cast<std::size_t>(arity), 0);
            for (int m = 0; m <= d; ++m) {
                e[static_cast<std::size_t>(i)] = m;
                e[static_cast<std::size_t>(p + j)] = m;
                factor.add_term(e, 1);
            }
            kernel = (kernel * factor).truncated(2 * d);
        }

    return {schur_sum, kernel};
}

std::pair<MonomialPolynomial, MonomialPolynomial> dual_cauchy_truncated(int p, int q)
{
    if (p < 1 || q < 1)
        throw std::invalid_argument("dual_cauchy_truncated needs p, q >= 1");
    const int arity = p + q;

    MonomialPolynomial product = MonomialPolynomial::one(arity);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            MonomialPolynomial factor = MonomialPolynomial::one(arity);
            MonomialPolynomial::Exponents e(static_cast<std::size_t>(arity), 0);
            e[static_cast<std::size_t>(i)] = 1;
            e[static_cast<std::size_t>(p + j)] = 1;
            factor.add_term(e, -1);
            product = product * factor;
        }

    MonomialPolynomial schur_sum(arity);
    for (const Partition& lambda : partitions_up_to_weight(static_cast<long long>(p) * q)) {
        if (lambda.length() > static_cast<std::size_t>(q) || lambda.part(1) > p)
            continue;
        MonomialPolynomial term = ssyt_expand(lambda.conjugate(), p).embedded(arity, 0) *
                                  ssyt_expand(lambda, q).embedded(arity, p);
        schur_sum += lambda.weight() % 2 == 0 ? term : -term;
    }

    return {product, schur_sum};
}

bool sigma_additivity_check(int p1, int p2, int d)
{
    if (p1 < 0 || p2 < 0 || d < 0)
        throw std::invalid_argument("sigma_additivity_check needs nonnegative arguments");
    const int total = p1 + p2;
    for (long long k = 0; k <= d; ++k) {
        MonomialPolynomial split(total);
        for (long long j = 0; j <= k; ++j)
            split += h_expand(j, p1).embedded(total, 0) *
                     h_expand(k - j, p2).embedded(total, p1);
        if (split != h_expand(k, total))
            return false;
    }
    return true;
}

bool negative_alphabet_corollary_check(const Partition& alpha, int p, int d_t)
{
    if (p < 1)
        throw std::invalid_argument("need at least one positive letter");
    if (d_t < 1)
        throw std::invalid_argument("u-degree bound must be >= 1");
    const int arity = p + 1;

    const MonomialPolynomial diff = signed_tableaux_expand(alpha, AlphabetSpec{p, 1});
    MonomialPolynomial lhs(arity);
    for (const auto& [e, c] : diff.terms())
        if (e[static_cast<std::size_t>(p)] <= d_t)
            lhs.add_term(e, c);

    MonomialPolynomial rhs(arity);
    for (long long k = 0; k <= std::min<long long>(static_cast<long long>(alpha.length()), d_t);
         ++k) {
        MonomialPolynomial level(p);
        for (const Partition& lambda : vertical_strip_removals(alpha, k))
            level += ssyt_expand(lambda, p);
        const MonomialPolynomial lifted = level.embedded(arity, 0);
        for (const auto& [e, c] : lifted.terms()) {
            MonomialPolynomial::Exponents shifted = e;
            shifted[static_cast<std::size_t>(p)] = static_cast<int>(k);
            rhs.add_term(shifted, k % 2 == 0 ? c : -c);
        }
    }

    return lhs == rhs;
}

} // namespace schur
