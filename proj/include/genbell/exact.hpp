#pragma once
// Exact rational scalars and factorial-type primitives.

#include <gmpxx.h>

#include <cstdint>
#include <regex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genbell {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p" or "p/q". Decimals, exponents and zero denominators are rejected.
inline Rational parse_rational(std::string_view text)
{
    static const std::regex pattern(R"(^\s*([+-]?[0-9]+)(/([0-9]+))?\s*$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, pattern))
        throw std::invalid_argument("not a rational of the form p or p/q: '" + s + "'");
    std::string num = m[1].str();
    if (!num.empty() && num.front() == '+') num.erase(0, 1);
    Integer p(num, 10);
    Integer q(1);
    if (m[3].matched) {
        q = Integer(m[3].str(), 10);
        if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Wire format: "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

inline Rational ipow(const Rational& base, std::uint64_t exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1u;
        if (exponent != 0) b *= b;
    }
    return result;
}

inline Rational sign_power(std::uint64_t exponent)
{
    return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

/// Rising factorial a(a+1)...(a+n-1); rising(a, 0) = 1.
inline Rational rising(const Rational& a, unsigned n)
{
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= a + i;
    return r;
}

/// Falling factorial a(a-1)...(a-n+1); falling(a, 0) = 1.
inline Rational falling(const Rational& a, unsigned n)
{
    Rational r(1);
    for (unsigned i = 0; i < n; ++i) r *= a - i;
    return r;
}

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Generalized binomial coefficient falling(a, k) / k!.
inline Rational binom(const Rational& a, unsigned k)
{
    Rational r = falling(a, k);
    r /= Rational(factorial(k));
    return r;
}

inline Integer binom_int(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Smallest integer >= r.
inline Integer ceil(const Rational& r)
{
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return c;
}

inline Rational abs(const Rational& r)
{
    return r < 0 ? Rational(-r) : r;
}

} // namespace genbell
