#pragma once

#include "genbell/exact.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genbell {

/// Dense univariate polynomial over Q; index i holds the coefficient of x^i.
/// Trailing zeros are never stored, so the zero polynomial has no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;

    explicit QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    QPolynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static QPolynomial constant(const Rational& v) { return QPolynomial(std::vector<Rational>{v}); }

    static QPolynomial monomial(const Rational& coeff, std::size_t power)
    {
        std::vector<Rational> c(power + 1);
        c[power] = coeff;
        return QPolynomial(std::move(c));
    }

    static QPolynomial x() { return monomial(1, 1); }

    /// Degree of the polynomial; -1 for zero.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    const Rational& leading() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    std::span<const Rational> coefficients() const { return c_; }

    Rational operator()(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    QPolynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return QPolynomial(std::move(d));
    }

    /// p(x) -> x^k p(x)
    QPolynomial shift_up(std::size_t k) const
    {
        if (is_zero()) return {};
        std::vector<Rational> d(k);
        d.insert(d.end(), c_.begin(), c_.end());
        return QPolynomial(std::move(d));
    }

    /// p(x) -> p(s x)
    QPolynomial scale_argument(const Rational& s) const
    {
        std::vector<Rational> d(c_);
        Rational f(1);
        for (auto& v : d) {
            v *= f;
            f *= s;
        }
        return QPolynomial(std::move(d));
    }

    QPolynomial& operator+=(const QPolynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    QPolynomial& operator-=(const QPolynomial& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    QPolynomial& operator*=(const Rational& s)
    {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const Rational& s) { return a *= s; }
    friend QPolynomial operator*(const Rational& s, QPolynomial a) { return a *= s; }
    friend QPolynomial operator-(QPolynomial a)
    {
        for (auto& v : a.c_) v = -v;
        return a;
    }

    friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
        }
        return QPolynomial(std::move(d));
    }

    QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

    friend bool operator==(const QPolynomial& a, const QPolynomial& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Euclidean division over Q: returns (quotient, remainder).
inline std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
    const long db = b.degree();
    if (a.degree() < db) return {QPolynomial{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational& lb = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        Rational f = r[static_cast<std::size_t>(i)] / lb;
        q[static_cast<std::size_t>(i - db)] = f;
        if (f == 0) continue;
        for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
    }
    r.resize(static_cast<std::size_t>(db));
    return {QPolynomial(std::move(q)), QPolynomial(std::move(r))};
}

/// Positive rational multiple of p with coprime integer coefficients.
inline QPolynomial primitive_part(const QPolynomial& p)
{
    if (p.is_zero()) return p;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& c : p.coefficients()) {
        if (c == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    return p * Rational(den_lcm, num_gcd);
}

inline QPolynomial monic(const QPolynomial& p)
{
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading());
}

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline QPolynomial gcd(QPolynomial a, QPolynomial b)
{
    while (!b.is_zero()) {
        QPolynomial r = primitive_part(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline QPolynomial exact_quotient(const QPolynomial& a, const QPolynomial& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

/// Coefficient list, low to high, in wire format: "2, 4, 1". The zero polynomial prints as "0".
inline std::string coefficient_list(const QPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        if (i) out += ", ";
        out += to_string(p.coefficients()[i]);
    }
    return out;
}

namespace detail {

inline std::string pretty_integral(const QPolynomial& p, const std::string& var)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        Rational c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string term;
        if (i == 0 || mag != 1) term += to_string(mag);
        if (i >= 1) term += var;
        if (i >= 2) term += "^" + std::to_string(i);
        out += term;
    }
    return out;
}

} // namespace detail

/// Human-readable form, highest power first, e.g. "x^2 + 4x + 2". A common
/// denominator is factored out: "(x^2 + 4x + 2)/2".
inline std::string pretty(const QPolynomial& p, const std::string& var = "x")
{
    Integer den(1);
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    if (den == 1) return detail::pretty_integral(p, var);
    return "(" + detail::pretty_integral(p * Rational(den), var) + ")/" + den.get_str();
}

} // namespace genbell
