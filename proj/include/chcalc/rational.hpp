/*
 * rational.hpp
 * ------------
 * Exact rational scalars with queryable p-adic valuation.
 *
 * Rational is an arbitrary-precision fraction kept in lowest terms with a
 * positive denominator (zero is 0/1).  Everything downstream of this header
 * is exact: there is no floating point anywhere in the library.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace chcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(int n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

inline void require_prime(long p) {
    if (!is_prime(p))
        throw std::invalid_argument("expected a prime, got " + std::to_string(p));
}

/*
 * p-adic valuation, with +infinity for 0 represented as an empty optional.
 * Ordering helpers treat nullopt as larger than every finite value.
 */
using Valuation = std::optional<long>;

inline constexpr Valuation valuation_infinity() { return std::nullopt; }

inline bool valuation_less(const Valuation& a, const Valuation& b) {
    if (!a)
        return false;
    if (!b)
        return true;
    return *a < *b;
}

inline Valuation valuation_min(const Valuation& a, const Valuation& b) {
    return valuation_less(a, b) ? a : b;
}

inline long valuation_of_int(BigInt n, long p) {
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// nu_p(q): exponent of p in the numerator minus exponent in the denominator.
inline Valuation valuation(const Rational& q, long p) {
    require_prime(p);
    if (q == 0)
        return valuation_infinity();
    return valuation_of_int(numerator(q) < 0 ? BigInt(-numerator(q)) : numerator(q), p) -
           valuation_of_int(denominator(q), p);
}

// Membership in Z_(p) = { q : nu_p(q) >= 0 }, i.e. p does not divide the denominator.
inline bool in_zp(const Rational& q, long p) {
    require_prime(p);
    return denominator(q) % p != 0;
}

// Serializes as "num/den" with the denominator omitted when it is 1.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

// Accepts the same "num/den" form (whitespace-free).
inline Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    }
}

/*
 * Renders a scalar as c*A!/(5!^k) when such a form with a small cofactor
 * exists, for side-by-side comparison with tables whose entries carry
 * factorial scalings.  Falls back to plain num/den.
 */
inline std::string factorial_form(const Rational& q) {
    if (q == 0)
        return "0";
    // a factorial form must read simpler than the plain fraction
    BigInt plain_cost = abs(numerator(q)) * denominator(q);
    const BigInt cofactor_bound = 60;
    std::string best;
    BigInt best_cost = plain_cost < cofactor_bound ? plain_cost : cofactor_bound + 1;
    for (int a = 20; a >= 7; --a) {
        BigInt fa = factorial(a);
        for (int k = 0; k <= 3; ++k) {
            BigInt denpow = 1;
            for (int i = 0; i < k; ++i)
                denpow *= factorial(5);
            Rational c = q * Rational(denpow, fa);
            BigInt cost = abs(numerator(c)) * denominator(c);
            if (cost >= best_cost)
                continue;
            std::string s;
            if (c == 1)
                s = "";
            else if (c == -1)
                s = "-";
            else
                s = to_string(c) + "*";
            s += std::to_string(a) + "!";
            if (k == 1)
                s += "/5!";
            else if (k > 1) {
                s += "/(";
                for (int i = 0; i < k; ++i)
                    s += "5!";
                s += ")";
            }
            best = s;
            best_cost = cost;
        }
    }
    return best.empty() ? to_string(q) : best;
}

}  // namespace chcalc
