#include "hodge/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hodge {

Integer factorial(int n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Integer binomial(int n, int k)
{
    if (k < 0 || k > n)
        return Integer(0);
    // Multiplicative formula; every intermediate division is exact.
    Integer result(1);
    for (int j = 1; j <= k; ++j) {
        result *= n - k + j;
        result /= j;
    }
    return result;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

Rational rational_pow(const Rational& base, int exponent)
{
    if (exponent == 0)
        return Rational(1);
    if (base == 0 && exponent < 0)
        throw std::domain_error("rational_pow: negative power of zero");
    const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    return exponent > 0 ? make_rational(num, den) : make_rational(den, num);
}

Rational parse_rational(std::string_view text)
{
    const auto is_digits = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char ch : s)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                return false;
        return true;
    };

    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("parse_rational: malformed rational '" + std::string(text) + "'");

    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

} // namespace hodge
