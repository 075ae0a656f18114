#pragma once
// Truncated power series in t whose coefficients are polynomials in x over Q.
// This is the ground-truth engine: generating-function statements are
// recomputed here by brute expansion, independently of the closed forms.

#include "genbell/exact.hpp"
#include "genbell/qpolynomial.hpp"

#include <stdexcept>
#include <vector>

namespace genbell {

/// Power series sum_{i<=order} c_i(x) t^i; always holds exactly order+1 coefficients.
class QXSeries {
public:
    explicit QXSeries(std::size_t order) : c_(order + 1) {}

    QXSeries(std::size_t order, std::vector<QPolynomial> coeffs) : c_(std::move(coeffs))
    {
        c_.resize(order + 1);
    }

    static QXSeries one(std::size_t order)
    {
        QXSeries s(order);
        s.c_[0] = QPolynomial::constant(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }

    const QPolynomial& operator[](std::size_t i) const { return c_.at(i); }
    QPolynomial& operator[](std::size_t i) { return c_.at(i); }

    /// Same series truncated to a lower order.
    QXSeries truncated(std::size_t order) const
    {
        if (order > this->order()) throw std::invalid_argument("cannot truncate a series to a higher order");
        return QXSeries(order, std::vector<QPolynomial>(c_.begin(), c_.begin() + static_cast<long>(order) + 1));
    }

    /// Formal d/dt; the top coefficient is lost, so the order drops by one.
    QXSeries derivative_t() const
    {
        if (order() == 0) throw std::domain_error("derivative of an order-0 series has no coefficients");
        QXSeries d(order() - 1);
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) d.c_[i] = c_[i + 1] * Rational(static_cast<unsigned long>(i + 1));
        return d;
    }

    QXSeries& operator+=(const QXSeries& o)
    {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }

    QXSeries& operator-=(const QXSeries& o)
    {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }

    /// Multiplies every coefficient by a polynomial in x.
    QXSeries& operator*=(const QPolynomial& p)
    {
        for (auto& c : c_) c *= p;
        return *this;
    }

    QXSeries& operator*=(const Rational& s)
    {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend QXSeries operator+(QXSeries a, const QXSeries& b) { return a += b; }
    friend QXSeries operator-(QXSeries a, const QXSeries& b) { return a -= b; }
    friend QXSeries operator*(QXSeries a, const QPolynomial& p) { return a *= p; }
    friend QXSeries operator*(QXSeries a, const Rational& s) { return a *= s; }

    friend bool operator==(const QXSeries& a, const QXSeries& b) { return a.c_ == b.c_; }

    void check_order(const QXSeries& o) const
    {
        if (o.order() != order()) throw std::invalid_argument("series orders differ");
    }

private:
    std::vector<QPolynomial> c_;
};

/// Truncated Cauchy product; both operands must share the same order.
inline QXSeries series_mul(const QXSeries& a, const QXSeries& b)
{
    a.check_order(b);
    const std::size_t n = a.order();
    QXSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

inline QXSeries series_pow(const QXSeries& s, unsigned k)
{
    QXSeries r = QXSeries::one(s.order());
    for (unsigned i = 0; i < k; ++i) r = series_mul(r, s);
    return r;
}

/// (1 - t)^a = sum_n binom(a, n) (-t)^n, truncated at `order`.
inline QXSeries binomial_series(const Rational& a, std::size_t order)
{
    QXSeries s(order);
    Rational c(1);
    for (std::size_t n = 0; n <= order; ++n) {
        s[n] = QPolynomial::constant(c);
        // binom(a, n+1)(-1)^{n+1} from binom(a, n)(-1)^n
        c *= Rational(-(a - static_cast<unsigned long>(n)));
        c /= static_cast<unsigned long>(n + 1);
    }
    return s;
}

/// exp(s) = sum_k s^k / k!; s must have zero constant term.
inline QXSeries series_exp(const QXSeries& s)
{
    if (!s[0].is_zero()) throw std::domain_error("series_exp requires a zero constant term");
    QXSeries result = QXSeries::one(s.order());
    QXSeries power = QXSeries::one(s.order());
    for (unsigned k = 1; k <= s.order(); ++k) {
        power = series_mul(power, s);
        power *= Rational(1, k);
        result += power;
    }
    return result;
}

/// F(t, x) = (1 - t)^alpha exp(x((1 - t)^beta - 1)), truncated at `order`.
inline QXSeries family_gf(const Rational& alpha, const Rational& beta, std::size_t order)
{
    if (beta == 0) throw std::invalid_argument("beta must be nonzero");
    QXSeries inner = binomial_series(beta, order) - QXSeries::one(order);
    inner *= QPolynomial::x();
    return series_mul(binomial_series(alpha, order), series_exp(inner));
}

/// P_0..P_nmax read off the generating function: P_n = n! [t^n] F.
inline std::vector<QPolynomial> gf_polynomials(const Rational& alpha, const Rational& beta, std::size_t nmax)
{
    QXSeries f = family_gf(alpha, beta, nmax);
    std::vector<QPolynomial> out;
    out.reserve(nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) out.push_back(f[n] * Rational(factorial(static_cast<unsigned>(n))));
    return out;
}

} // namespace genbell
