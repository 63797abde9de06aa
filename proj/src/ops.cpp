#include "schur/ops.hpp"

namespace schur {

SchurExpansion multiply_h(const SchurExpansion& expansion, long long k)
{
    SchurExpansion out;
    for (const auto& [lambda, c] : expansion.terms())
        for (const Partition& mu : horizontal_strip_additions(lambda, k))
            out.add(mu, c);
    return out;
}

SchurExpansion skew_column(const SchurExpansion& expansion, long long j)
{
    SchurExpansion out;
    for (const auto& [lambda, c] : expansion.terms())
        for (const Partition& mu : vertical_strip_removals(lambda, j))
            out.add(mu, c);
    return out;
}

SchurExpansion p_perp(long long i, const Partition& alpha)
{
    if (i < 1)
        throw std::invalid_argument("power sum index must be >= 1");
    SchurExpansion out;
    for (std::size_t row = 0; row < alpha.length(); ++row) {
        std::vector<long long> parts(alpha.parts());
        parts[row] = checked_add(parts[row], -i);
        out += SchurExpansion::from_straightening(
            staircase_straighten(IntegerSequence(std::move(parts))));
    }
    return out;
}

std::vector<BorderStrip> border_strip_removals(const Partition& alpha, long long size)
{
    std::vector<BorderStrip> out;
    if (size < 1)
        return out;
    const long long l = static_cast<long long>(alpha.length());
    for (long long i = 1; i <= l; ++i) {
        long long removed_above = 0;
        for (long long j = i; j <= l; ++j) {
            if (j > i) {
                removed_above += alpha.part(static_cast<std::size_t>(j - 1)) -
                                 alpha.part(static_cast<std::size_t>(j)) + 1;
                if (removed_above >= size)
                    break;
            }
            long long rem = size - removed_above;
            long long new_last = alpha.part(static_cast<std::size_t>(j)) - rem;
            if (rem < 1 || new_last < alpha.part(static_cast<std::size_t>(j + 1)))
                continue;
            std::vector<long long> parts(alpha.parts());
            for (long long r = i; r < j; ++r)
                parts[static_cast<std::size_t>(r - 1)] =
                    alpha.part(static_cast<std::size_t>(r + 1)) - 1;
            parts[static_cast<std::size_t>(j - 1)] = new_last;
            out.push_back(BorderStrip{Partition(std::move(parts)), j - i + 1});
        }
    }
    return out;
}

SchurExpansion murnaghan_nakayama_perp(long long i, const Partition& alpha)
{
    if (i < 1)
        throw std::invalid_argument("power sum index must be >= 1");
    SchurExpansion out;
    for (const BorderStrip& strip : border_strip_removals(alpha, i))
        out.add(strip.remainder, strip.height % 2 == 1 ? 1 : -1);
    return out;
}

GradedExpansion gamma_one(const Partition& alpha, long long max_degree)
{
    if (max_degree < 0)
        throw std::invalid_argument("max_degree must be >= 0");
    GradedExpansion out;
    const long long w = alpha.weight();
    for (long long j = 0; j <= static_cast<long long>(alpha.length()); ++j) {
        SchurExpansion skewed = skew_column(SchurExpansion::single(alpha), j);
        if (skewed.is_zero())
            continue;
        if (j % 2 == 1)
            skewed = -skewed;
        for (long long i = 0; w - j + i <= max_degree; ++i)
            out.add_piece(w - j + i, multiply_h(skewed, i));
    }
    return out;
}

} // namespace schur
