#include "schur/expansion.hpp"

namespace schur {

SchurExpansion SchurExpansion::single(const Partition& p, long long coeff)
{
    SchurExpansion e;
    e.add(p, coeff);
    return e;
}

SchurExpansion SchurExpansion::from_straightening(const StraighteningResult& r)
{
    if (r.is_zero())
        return SchurExpansion();
    return single(r.partition(), r.sign());
}

void SchurExpansion::add(const Partition& p, long long coeff)
{
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(p, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    }
}

long long SchurExpansion::coefficient(const Partition& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& other)
{
    for (const auto& [p, c] : other.terms_)
        add(p, c);
    return *this;
}

SchurExpansion& SchurExpansion::operator-=(const SchurExpansion& other)
{
    for (const auto& [p, c] : other.terms_)
        add(p, -c);
    return *this;
}

SchurExpansion SchurExpansion::scaled(long long c) const
{
    SchurExpansion out;
    for (const auto& [p, coeff] : terms_)
        out.add(p, checked_mul(coeff, c));
    return out;
}

void GradedExpansion::add_piece(long long degree, const SchurExpansion& piece)
{
    if (piece.is_zero())
        return;
    if (degree < 0)
        throw std::invalid_argument("graded piece degree is negative");
    auto [it, inserted] = pieces_.try_emplace(degree, piece);
    if (!inserted) {
        it->second += piece;
        if (it->second.is_zero())
            pieces_.erase(it);
    }
}

const SchurExpansion& GradedExpansion::piece(long long degree) const
{
    static const SchurExpansion empty;
    auto it = pieces_.find(degree);
    return it == pieces_.end() ? empty : it->second;
}

} // namespace schur
