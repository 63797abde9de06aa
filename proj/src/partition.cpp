#include "schur/partition.hpp"

#include <algorithm>

namespace schur {

long long checked_add(long long a, long long b)
{
    long long out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in addition");
    return out;
}

long long checked_mul(long long a, long long b)
{
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("64-bit overflow in multiplication");
    return out;
}

Partition::Partition(std::vector<long long> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition part " + std::to_string(i + 1) +
                                        " is negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts increase at index " +
                                        std::to_string(i + 2));
    }
}

long long Partition::weight() const
{
    long long w = 0;
    for (long long p : parts_)
        w = checked_add(w, p);
    return w;
}

Partition Partition::conjugate() const
{
    if (parts_.empty())
        return Partition();
    std::vector<long long> cols(static_cast<std::size_t>(parts_[0]), 0);
    for (long long p : parts_)
        for (long long c = 0; c < p; ++c)
            ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const
{
    if (other.length() > length())
        return false;
    for (std::size_t i = 0; i < other.length(); ++i)
        if (other.parts_[i] > parts_[i])
            return false;
    return true;
}

long long IntegerSequence::sum() const
{
    long long s = 0;
    for (long long p : parts)
        s = checked_add(s, p);
    return s;
}

IntegerSequence prepended(long long n, const Partition& alpha)
{
    std::vector<long long> parts;
    parts.reserve(alpha.length() + 1);
    parts.push_back(n);
    parts.insert(parts.end(), alpha.parts().begin(), alpha.parts().end());
    return IntegerSequence(std::move(parts));
}

Partition make_partition(const std::vector<long long>& parts)
{
    return Partition(parts);
}

namespace {

void vertical_removals_rec(const std::vector<long long>& alpha, std::size_t row,
                           long long remaining, long long prev,
                           std::vector<long long>& picked, std::vector<Partition>& out)
{
    if (row == alpha.size()) {
        if (remaining == 0)
            out.emplace_back(picked);
        return;
    }
    if (remaining < 0)
        return;
    for (long long v : {alpha[row], alpha[row] - 1}) {
        if (v > prev || alpha[row] - v > remaining)
            continue;
        picked.push_back(v);
        vertical_removals_rec(alpha, row + 1, remaining - (alpha[row] - v), v, picked, out);
        picked.pop_back();
    }
}

void horizontal_additions_rec(const Partition& lambda, std::size_t row, long long remaining,
                              long long prev_mu, std::vector<long long>& picked,
                              std::vector<Partition>& out)
{
    if (row == lambda.length() + 2) {
        if (remaining == 0)
            out.emplace_back(picked);
        return;
    }
    long long lo = lambda.part(row);
    long long hi = std::min(prev_mu, checked_add(lambda.part(row), remaining));
    for (long long v = hi; v >= lo; --v) {
        picked.push_back(v);
        horizontal_additions_rec(lambda, row + 1, remaining - (v - lo), lambda.part(row),
                                 picked, out);
        picked.pop_back();
    }
}

} // namespace

std::vector<Partition> vertical_strip_removals(const Partition& alpha, long long k)
{
    std::vector<Partition> out;
    if (k < 0 || k > static_cast<long long>(alpha.length()))
        return out;
    std::vector<long long> picked;
    vertical_removals_rec(alpha.parts(), 0, k,
                          alpha.empty() ? 0 : alpha.parts()[0], picked, out);
    std::sort(out.begin(), out.end(), LexGreater());
    return out;
}

std::vector<Partition> horizontal_strip_additions(const Partition& lambda, long long k)
{
    std::vector<Partition> out;
    if (k < 0)
        return out;
    std::vector<long long> picked;
    long long cap = checked_add(lambda.part(1), k);
    horizontal_additions_rec(lambda, 1, k, cap, picked, out);
    std::sort(out.begin(), out.end(), LexGreater());
    return out;
}

std::vector<Cell> alpha_removable_corners(const Partition& alpha, const Partition& mu)
{
    std::vector<Cell> out;
    for (std::size_t i = 1; i <= alpha.length(); ++i) {
        if (mu.part(i) >= alpha.part(i) && mu.part(i + 1) < alpha.part(i))
            out.push_back(Cell{static_cast<long long>(i), alpha.part(i)});
    }
    std::sort(out.begin(), out.end(),
              [](const Cell& a, const Cell& b) { return a.column < b.column; });
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1].column == out[i].column)
            throw std::logic_error("removable corners share a column");
    return out;
}

namespace {

void partitions_rec(long long remaining, long long cap, std::vector<long long>& picked,
                    std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(picked);
        return;
    }
    for (long long v = std::min(cap, remaining); v >= 1; --v) {
        picked.push_back(v);
        partitions_rec(remaining - v, v, picked, out);
        picked.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of_weight(long long w)
{
    std::vector<Partition> out;
    if (w < 0)
        return out;
    std::vector<long long> picked;
    partitions_rec(w, w, picked, out);
    std::sort(out.begin(), out.end(), LexGreater());
    return out;
}

std::vector<Partition> partitions_up_to_weight(long long w)
{
    std::vector<Partition> out;
    for (long long v = 0; v <= w; ++v) {
        auto batch = partitions_of_weight(v);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

} // namespace schur
