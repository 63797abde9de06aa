#include "schur/straighten.hpp"

#include <algorithm>

namespace schur {

StraighteningResult StraighteningResult::signed_partition(int sign, Partition p)
{
    if (sign != 1 && sign != -1)
        throw std::logic_error("straightening sign must be +1 or -1");
    StraighteningResult r;
    r.zero_ = false;
    r.sign_ = sign;
    r.partition_ = std::move(p);
    return r;
}

int StraighteningResult::sign() const
{
    if (zero_)
        throw std::logic_error("sign() called on the zero straightening");
    return sign_;
}

const Partition& StraighteningResult::partition() const
{
    if (zero_)
        throw std::logic_error("partition() called on the zero straightening");
    return partition_;
}

StraighteningResult staircase_straighten(const IntegerSequence& seq)
{
    const long long l = static_cast<long long>(seq.length());
    std::vector<long long> beta(seq.parts);
    for (long long i = 0; i < l; ++i) {
        beta[static_cast<std::size_t>(i)] = checked_add(beta[static_cast<std::size_t>(i)],
                                                        l - 1 - i);
        if (beta[static_cast<std::size_t>(i)] < 0)
            return StraighteningResult::zero();
    }

    long long inversions = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        for (std::size_t j = i + 1; j < beta.size(); ++j) {
            if (beta[i] == beta[j])
                return StraighteningResult::zero();
            if (beta[i] < beta[j])
                ++inversions;
        }

    std::sort(beta.begin(), beta.end(), std::greater<long long>());
    for (long long i = 0; i < l; ++i)
        beta[static_cast<std::size_t>(i)] -= l - 1 - i;
    return StraighteningResult::signed_partition(inversions % 2 == 0 ? 1 : -1,
                                                 Partition(std::move(beta)));
}

StraighteningResult row_exchange_straighten(const IntegerSequence& seq)
{
    std::vector<long long> v(seq.parts);
    const long long l = static_cast<long long>(v.size());
    int sign = 1;

    long long budget = checked_add(checked_mul(l, l), 1);
    while (true) {
        std::size_t i = 0;
        while (i + 1 < v.size() && v[i] >= v[i + 1])
            ++i;
        if (i + 1 >= v.size())
            break;
        if (v[i + 1] == v[i] + 1)
            return StraighteningResult::zero();
        long long a = v[i];
        long long b = v[i + 1];
        v[i] = checked_add(b, -1);
        v[i + 1] = checked_add(a, 1);
        sign = -sign;
        if (--budget < 0)
            throw std::logic_error("row exchange failed to terminate");
    }

    for (long long p : v)
        if (p < 0)
            return StraighteningResult::zero();
    return StraighteningResult::signed_partition(sign, Partition(std::move(v)));
}

} // namespace schur
