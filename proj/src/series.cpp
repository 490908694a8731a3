#include "hodge/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hodge {

Series::Series(int order)
{
    if (order < 0)
        throw std::invalid_argument("Series: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("Series: empty coefficient vector");
}

Series Series::constant(const Rational& value, int order)
{
    Series s(order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::monomial(const Rational& value, int exponent, int order)
{
    if (exponent < 0)
        throw std::invalid_argument("Series::monomial: negative exponent");
    Series s(order);
    if (exponent <= order)
        s.coeffs_[static_cast<size_t>(exponent)] = value;
    return s;
}

const Rational& Series::coeff(int n) const
{
    if (n < 0 || n > order())
        throw std::out_of_range("Series::coeff: index outside truncation order");
    return coeffs_[static_cast<size_t>(n)];
}

Rational Series::coeff_or_zero(int n) const
{
    if (n < 0 || n > order())
        return Rational(0);
    return coeffs_[static_cast<size_t>(n)];
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

bool Series::is_even() const
{
    for (int n = 1; n <= order(); n += 2)
        if (coeffs_[static_cast<size_t>(n)] != 0)
            return false;
    return true;
}

int Series::valuation() const
{
    for (int n = 0; n <= order(); ++n)
        if (coeffs_[static_cast<size_t>(n)] != 0)
            return n;
    return order() + 1;
}

Series Series::truncated(int new_order) const
{
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("Series::truncated: order out of range");
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series Series::with_coeff(int n, const Rational& value) const
{
    if (n < 0 || n > order())
        throw std::out_of_range("Series::with_coeff: index outside truncation order");
    std::vector<Rational> c = coeffs_;
    c[static_cast<size_t>(n)] = value;
    return Series(std::move(c));
}

Series Series::operator-() const
{
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c)
        x = -x;
    return Series(std::move(c));
}

Series operator+(const Series& a, const Series& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        c[static_cast<size_t>(i)] = a.coeffs_[static_cast<size_t>(i)] + b.coeffs_[static_cast<size_t>(i)];
    return Series(std::move(c));
}

Series operator-(const Series& a, const Series& b)
{
    return a + (-b);
}

Series operator*(const Series& a, const Series& b)
{
    const int n = std::min(a.order(), b.order());
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        const Rational& ai = a.coeffs_[static_cast<size_t>(i)];
        if (ai == 0)
            continue;
        for (int j = 0; i + j <= n && j <= b.order(); ++j)
            c[static_cast<size_t>(i + j)] += ai * b.coeffs_[static_cast<size_t>(j)];
    }
    return Series(std::move(c));
}

Series operator*(const Series& a, const Rational& c)
{
    std::vector<Rational> out = a.coeffs_;
    for (Rational& x : out)
        x *= c;
    return Series(std::move(out));
}

Series operator*(const Rational& c, const Series& a)
{
    return a * c;
}

Series operator/(const Series& a, const Rational& c)
{
    if (c == 0)
        throw std::domain_error("Series: division by zero scalar");
    std::vector<Rational> out = a.coeffs_;
    for (Rational& x : out)
        x /= c;
    return Series(std::move(out));
}

bool operator==(const Series& a, const Series& b)
{
    const int n = std::min(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.coeffs_[static_cast<size_t>(i)] != b.coeffs_[static_cast<size_t>(i)])
            return false;
    return true;
}

Series divide(const Series& a, const Series& b)
{
    const int vb = b.valuation();
    if (vb > b.order())
        throw std::domain_error("divide: divisor is identically zero up to its order");
    for (int n = 0; n < vb; ++n)
        if (a.coeff_or_zero(n) != 0)
            throw std::domain_error("divide: valuation of dividend below valuation of divisor");

    const int out_order = std::min(a.order(), b.order()) - vb;
    // Shift u^vb out of both operands, then do the standard recurrence
    // against the now-invertible constant term.
    std::vector<Rational> q(static_cast<size_t>(out_order) + 1, Rational(0));
    const Rational& lead = b.coeff(vb);
    for (int n = 0; n <= out_order; ++n) {
        Rational acc = a.coeff_or_zero(n + vb);
        for (int j = 1; j <= n; ++j)
            acc -= b.coeff_or_zero(vb + j) * q[static_cast<size_t>(n - j)];
        q[static_cast<size_t>(n)] = acc / lead;
    }
    return Series(std::move(q));
}

Series exp(const Series& a)
{
    if (a.coeff(0) != 0)
        throw std::domain_error("exp: nonzero constant term");
    const int n = a.order();
    Series result = Series::constant(Rational(1), n);
    Series term = Series::constant(Rational(1), n);
    for (int k = 1; k <= n; ++k) {
        term = term * a / Rational(k);
        if (term.is_zero())
            break;
        result = result + term;
    }
    return result;
}

Series log(const Series& a)
{
    if (a.coeff(0) != 1)
        throw std::domain_error("log: constant term is not 1");
    const int n = a.order();
    const Series x = a - Series::constant(Rational(1), n);
    Series result(n);
    Series power = Series::constant(Rational(1), n);
    for (int k = 1; k <= n; ++k) {
        power = power * x;
        if (power.is_zero())
            break;
        const Rational sign(k % 2 == 1 ? 1 : -1);
        result = result + power * (sign / Rational(k));
    }
    return result;
}

Series derivative(const Series& a)
{
    const int n = std::max(a.order() - 1, 0);
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    for (int i = 0; i + 1 <= a.order(); ++i)
        c[static_cast<size_t>(i)] = Rational(i + 1) * a.coeff(i + 1);
    return Series(std::move(c));
}

Series sin_scaled(const Rational& c, int order)
{
    if (order < 0)
        throw std::invalid_argument("sin_scaled: negative order");
    std::vector<Rational> out(static_cast<size_t>(order) + 1, Rational(0));
    Rational power = c; // c^{2k+1}
    const Rational c_squared = c * c;
    for (int k = 0; 2 * k + 1 <= order; ++k) {
        const Rational sign(k % 2 == 0 ? 1 : -1);
        out[static_cast<size_t>(2 * k + 1)] = sign * power / Rational(factorial(2 * k + 1));
        power *= c_squared;
    }
    return Series(std::move(out));
}

Series substitute_iu(const Series& a)
{
    if (!a.is_even())
        throw std::domain_error("substitute_iu: series has a nonzero odd coefficient");
    std::vector<Rational> c = a.coefficients();
    for (int g = 1; 2 * g <= a.order(); g += 2)
        c[static_cast<size_t>(2 * g)] = -c[static_cast<size_t>(2 * g)];
    return Series(std::move(c));
}

Series pow(const Series& a, int exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("pow: negative exponent");
    Series result = Series::constant(Rational(1), a.order());
    for (int k = 0; k < exponent; ++k)
        result = result * a;
    return result;
}

Rational raw_from_egf(const Rational& coefficient, int n)
{
    return coefficient * Rational(factorial(n));
}

Rational egf_from_raw(const Rational& value, int n)
{
    return value / Rational(factorial(n));
}

std::string to_string(const Series& s)
{
    std::ostringstream out;
    bool first = true;
    for (int n = 0; n <= s.order(); ++n) {
        if (s.coeff(n) == 0)
            continue;
        if (!first)
            out << " + ";
        out << "(" << to_string(s.coeff(n)) << ")";
        if (n > 0)
            out << "*u^" << n;
        first = false;
    }
    if (first)
        out << "0";
    out << " + O(u^" << s.order() + 1 << ")";
    return out.str();
}

} // namespace hodge
