#include "schur/monomial.hpp"

#include "schur/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace schur {

MonomialPolynomial::MonomialPolynomial(int arity) : arity_(arity)
{
    if (arity < 0)
        throw std::invalid_argument("polynomial arity is negative");
}

MonomialPolynomial MonomialPolynomial::zero(int arity)
{
    return MonomialPolynomial(arity);
}

MonomialPolynomial MonomialPolynomial::one(int arity)
{
    MonomialPolynomial p(arity);
    p.add_term(Exponents(static_cast<std::size_t>(arity), 0), 1);
    return p;
}

MonomialPolynomial MonomialPolynomial::variable(int arity, int index)
{
    if (index < 0 || index >= arity)
        throw std::invalid_argument("variable index " + std::to_string(index) +
                                    " outside arity " + std::to_string(arity));
    MonomialPolynomial p(arity);
    Exponents e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

long long MonomialPolynomial::coefficient(const Exponents& exponents) const
{
    auto it = terms_.find(exponents);
    return it == terms_.end() ? 0 : it->second;
}

void MonomialPolynomial::add_term(const Exponents& exponents, long long coeff)
{
    if (static_cast<int>(exponents.size()) != arity_)
        throw std::invalid_argument("exponent vector arity mismatch");
    for (int e : exponents)
        if (e < 0)
            throw std::invalid_argument("negative exponent");
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponents, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0)
            terms_.erase(it);
    }
}

MonomialPolynomial& MonomialPolynomial::operator+=(const MonomialPolynomial& other)
{
    if (other.arity_ != arity_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, c);
    return *this;
}

MonomialPolynomial& MonomialPolynomial::operator-=(const MonomialPolynomial& other)
{
    if (other.arity_ != arity_)
        throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : other.terms_)
        add_term(e, checked_mul(c, -1));
    return *this;
}

MonomialPolynomial MonomialPolynomial::operator-() const
{
    return scaled(-1);
}

MonomialPolynomial operator+(MonomialPolynomial a, const MonomialPolynomial& b)
{
    a += b;
    return a;
}

MonomialPolynomial operator-(MonomialPolynomial a, const MonomialPolynomial& b)
{
    a -= b;
    return a;
}

MonomialPolynomial operator*(const MonomialPolynomial& a, const MonomialPolynomial& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("polynomial arity mismatch");
    MonomialPolynomial out(a.arity());
    MonomialPolynomial::Exponents e(static_cast<std::size_t>(a.arity()), 0);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, checked_mul(ca, cb));
        }
    return out;
}

MonomialPolynomial MonomialPolynomial::scaled(long long c) const
{
    MonomialPolynomial out(arity_);
    for (const auto& [e, coeff] : terms_)
        out.add_term(e, checked_mul(coeff, c));
    return out;
}

MonomialPolynomial MonomialPolynomial::truncated(int max_degree) const
{
    MonomialPolynomial out(arity_);
    for (const auto& [e, c] : terms_) {
        long long degree = 0;
        for (int v : e)
            degree += v;
        if (degree <= max_degree)
            out.add_term(e, c);
    }
    return out;
}

MonomialPolynomial MonomialPolynomial::embedded(int new_arity, int offset) const
{
    if (offset < 0 || offset + arity_ > new_arity)
        throw std::invalid_argument("embedding does not fit the new arity");
    MonomialPolynomial out(new_arity);
    Exponents e(static_cast<std::size_t>(new_arity), 0);
    for (const auto& [old_e, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        std::copy(old_e.begin(), old_e.end(), e.begin() + offset);
        out.add_term(e, c);
    }
    return out;
}

MonomialPolynomial MonomialPolynomial::swap_variables(int a, int b) const
{
    if (a < 0 || a >= arity_ || b < 0 || b >= arity_)
        throw std::invalid_argument("variable index outside arity");
    MonomialPolynomial out(arity_);
    for (const auto& [e, c] : terms_) {
        Exponents swapped = e;
        std::swap(swapped[static_cast<std::size_t>(a)], swapped[static_cast<std::size_t>(b)]);
        out.add_term(swapped, c);
    }
    return out;
}

} // namespace schur
