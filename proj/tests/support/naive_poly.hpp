#pragma once

// Brute-force truncated polynomial arithmetic used as an independent oracle
// by the tests. Everything here is plain vector loops plus classical Taylor
// recurrences (tan' = 1 + tan^2, sec' = sec tan, Mercator log), kept separate
// from the library so the two computation paths share no code.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>; // index n = coefficient of u^n

inline Q q(long num, long den)
{
    Q value(num, den);
    value.canonicalize();
    return value;
}

inline Poly zero(int order)
{
    return Poly(static_cast<size_t>(order) + 1, Q(0));
}

inline Poly mul(const Poly& a, const Poly& b)
{
    const size_t n = std::min(a.size(), b.size());
    Poly c(n, Q(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n && j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

inline Poly add(const Poly& a, const Poly& b)
{
    const size_t n = std::min(a.size(), b.size());
    Poly c(n);
    for (size_t i = 0; i < n; ++i)
        c[i] = a[i] + b[i];
    return c;
}

inline Poly sub(const Poly& a, const Poly& b)
{
    const size_t n = std::min(a.size(), b.size());
    Poly c(n);
    for (size_t i = 0; i < n; ++i)
        c[i] = a[i] - b[i];
    return c;
}

inline Poly scale(const Poly& a, const Q& c)
{
    Poly out = a;
    for (Q& x : out)
        x *= c;
    return out;
}

// f(u) -> f(c u).
inline Poly scale_argument(const Poly& a, const Q& c)
{
    Poly out = a;
    Q power(1);
    for (Q& x : out) {
        x *= power;
        power *= c;
    }
    return out;
}

inline Q factorial_q(int n)
{
    Q f(1);
    for (int k = 2; k <= n; ++k)
        f *= k;
    return f;
}

// tan u from the recurrence (n+1) t_{n+1} = [u^n](1 + t^2).
inline Poly tan_series(int order)
{
    Poly t = zero(order);
    for (int n = 0; n < order; ++n) {
        Q acc = n == 0 ? Q(1) : Q(0);
        for (int i = 0; i <= n; ++i)
            acc += t[static_cast<size_t>(i)] * t[static_cast<size_t>(n - i)];
        t[static_cast<size_t>(n) + 1] = acc / Q(n + 1);
    }
    return t;
}

// sec u from sec' = sec tan.
inline Poly sec_series(int order)
{
    const Poly t = tan_series(order);
    Poly s = zero(order);
    s[0] = 1;
    for (int n = 0; n < order; ++n) {
        Q acc(0);
        for (int i = 0; i <= n; ++i)
            acc += s[static_cast<size_t>(i)] * t[static_cast<size_t>(n - i)];
        s[static_cast<size_t>(n) + 1] = acc / Q(n + 1);
    }
    return s;
}

// -ln cos u: the antiderivative of tan u.
inline Poly neg_log_cos(int order)
{
    const Poly t = tan_series(order);
    Poly f = zero(order);
    for (int n = 1; n <= order; ++n)
        f[static_cast<size_t>(n)] = t[static_cast<size_t>(n) - 1] / Q(n);
    return f;
}

// sin(u)/u from the factorial formula.
inline Poly sinc_series(int order)
{
    Poly s = zero(order);
    for (int k = 0; 2 * k <= order; ++k) {
        const Q sign(k % 2 == 0 ? 1 : -1);
        s[static_cast<size_t>(2 * k)] = sign / factorial_q(2 * k + 1);
    }
    return s;
}

// Mercator sum log(1 + p) for p with zero constant term.
inline Poly log_one_plus(const Poly& p)
{
    if (p.empty() || p[0] != 0)
        throw std::logic_error("oracle::log_one_plus: nonzero constant term");
    const int order = static_cast<int>(p.size()) - 1;
    Poly result = zero(order);
    Poly power(1, Q(1));
    power.resize(p.size(), Q(0));
    for (int k = 1; k <= order; ++k) {
        power = mul(power, p);
        const Q sign(k % 2 == 1 ? 1 : -1);
        result = add(result, scale(power, sign / Q(k)));
    }
    return result;
}

// ln(sin u / u).
inline Poly ln_sinc(int order)
{
    Poly p = sinc_series(order);
    p[0] -= 1;
    return log_one_plus(p);
}

// ln(d sin(u/2) / sin(du/2)) = ln sinc(u/2) - ln sinc(du/2).
inline Poly d1_oracle(int degree, int order)
{
    const Poly base = ln_sinc(order);
    return sub(scale_argument(base, q(1, 2)), scale_argument(base, q(degree, 2)));
}

// e^{c u^k} from the termwise formula sum c^j u^{kj} / j!.
inline Poly exp_monomial(const Q& c, int k, int order)
{
    Poly out = zero(order);
    Q term(1);
    for (int j = 0; k * j <= order; ++j) {
        out[static_cast<size_t>(k * j)] = term;
        term = term * c / Q(j + 1);
    }
    return out;
}

} // namespace oracle
