#pragma once

#include "hodge/rational.hpp"

#include <string>
#include <vector>

namespace hodge {

// Truncated formal power series in u with exact rational coefficients.
// A series of order N stores the coefficients of u^0 .. u^N, inclusive.
// Series are immutable values; every operation returns a fresh series and
// truncates to the smaller order of its operands.
class Series {
public:
    // Zero series of order 0.
    Series() : coeffs_(1) {}

    // Zero series of the given order.
    explicit Series(int order);

    // Takes coefficient n as the coefficient of u^n; order = size - 1.
    // Requires a nonempty vector.
    explicit Series(std::vector<Rational> coeffs);

    static Series constant(const Rational& value, int order);

    // value * u^exponent at the given order. An exponent beyond the order
    // yields the zero series (the monomial is below the truncation cut).
    static Series monomial(const Rational& value, int exponent, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Requires 0 <= n <= order().
    const Rational& coeff(int n) const;

    // 0 beyond the truncation order.
    Rational coeff_or_zero(int n) const;

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;

    // True when every odd coefficient vanishes (checked, not assumed).
    bool is_even() const;

    // Index of the first nonzero coefficient; order() + 1 when identically 0.
    int valuation() const;

    // Copy truncated to new_order (0 <= new_order <= order()).
    Series truncated(int new_order) const;

    // Copy with coefficient n replaced (0 <= n <= order()).
    Series with_coeff(int n, const Rational& value) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b); // Cauchy product
    friend Series operator*(const Series& a, const Rational& c);
    friend Series operator*(const Rational& c, const Series& a);
    friend Series operator/(const Series& a, const Rational& c);

    // Coefficient-wise equality up to the smaller of the two orders.
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

private:
    std::vector<Rational> coeffs_;
};

// Quotient q with q * b == a up to order min(order(a), order(b)) - val(b).
// Requires valuation(b) <= valuation(a) and b not identically zero; division
// factors u^val(b) out of both operands, so valuation-1 divisors are fine.
// Throws std::domain_error otherwise.
Series divide(const Series& a, const Series& b);

// sum a^k / k!. Requires a(0) = 0 (exact arithmetic cannot hold e^c for
// rational c != 0); throws std::domain_error otherwise.
Series exp(const Series& a);

// sum (-1)^{k+1} (a - 1)^k / k. Requires a(0) = 1; throws std::domain_error.
Series log(const Series& a);

// Formal d/du; the order drops by one (clamped at 0).
Series derivative(const Series& a);

// sin(c*u) = sum (-1)^k c^{2k+1} u^{2k+1} / (2k+1)! truncated at the order.
Series sin_scaled(const Rational& c, int order);

// u -> iu on an even series: multiplies the u^{2g} coefficient by (-1)^g.
// Throws std::domain_error when any odd coefficient is nonzero (the result
// would leave the rational coefficient field).
Series substitute_iu(const Series& a);

// a^exponent by repeated multiplication. Requires exponent >= 0.
Series pow(const Series& a, int exponent);

// EGF conventions: a series coefficient c at u^n corresponds to the raw
// value c * n!, and conversely.
Rational raw_from_egf(const Rational& coefficient, int n);
Rational egf_from_raw(const Rational& value, int n);

std::string to_string(const Series& s);

} // namespace hodge
