#pragma once

// Dense-exponent monomial polynomials over a fixed finite variable set,
// with exact int64 coefficients. Used by the brute-force tableau oracle;
// everything here is independent of the Schur-expansion machinery.

#include <cstdint>
#include <map>
#include <vector>

namespace schur {

/// Polynomial in `arity` commuting variables. A term maps an exponent
/// vector of length arity to a nonzero coefficient; all arithmetic is
/// overflow-checked and throws std::overflow_error.
class MonomialPolynomial {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, long long>;

    explicit MonomialPolynomial(int arity);

    static MonomialPolynomial zero(int arity);
    static MonomialPolynomial one(int arity);
    /// The single variable x_{index} (0-based).
    static MonomialPolynomial variable(int arity, int index);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    long long coefficient(const Exponents& exponents) const;
    void add_term(const Exponents& exponents, long long coeff);

    MonomialPolynomial& operator+=(const MonomialPolynomial& other);
    MonomialPolynomial& operator-=(const MonomialPolynomial& other);
    MonomialPolynomial operator-() const;
    friend MonomialPolynomial operator+(MonomialPolynomial a, const MonomialPolynomial& b);
    friend MonomialPolynomial operator-(MonomialPolynomial a, const MonomialPolynomial& b);
    friend MonomialPolynomial operator*(const MonomialPolynomial& a, const MonomialPolynomial& b);
    MonomialPolynomial scaled(long long c) const;

    /// Drops every term of total degree > max_degree.
    MonomialPolynomial truncated(int max_degree) const;
    /// Reinterprets over a larger variable set: variable i becomes
    /// variable i + offset. Requires offset + arity() <= new_arity.
    MonomialPolynomial embedded(int new_arity, int offset) const;
    /// Exchanges variables a and b in every term.
    MonomialPolynomial swap_variables(int a, int b) const;

    friend bool operator==(const MonomialPolynomial& a, const MonomialPolynomial& b) = default;

  private:
    int arity_ = 0;
    TermMap terms_;
};

} // namespace schur
