#pragma once
// Exact algebra on finite sums  sum_i c_i x^{g_i} e^{x^b}  with rational
// exponents g_i and a fixed rational b != 0. The set is closed under d/dx and
// the Euler operator x d/dx, which is all the derivative representations of
// P_n and B_n need. Identities "for x > 0" are compared as exponent maps.

#include "genbell/exact.hpp"
#include "genbell/family.hpp"
#include "genbell/stirling.hpp"

#include <map>
#include <utility>
#include <stdexcept>
#include <string>

namespace genbell {

class ExpMonomialSum {
public:
    using Terms = std::map<Rational, Rational>; // exponent -> coefficient, never zero

    explicit ExpMonomialSum(Rational beta_exp) : beta_(std::move(beta_exp))
    {
        if (beta_ == 0) throw std::invalid_argument("exponential exponent must be nonzero");
    }

    static ExpMonomialSum monomial(const Rational& beta_exp, const Rational& gamma, const Rational& coeff = 1)
    {
        ExpMonomialSum e(beta_exp);
        e.add(gamma, coeff);
        return e;
    }

    const Rational& beta_exp() const { return beta_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Rational coefficient(const Rational& gamma) const
    {
        auto it = terms_.find(gamma);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add(const Rational& gamma, const Rational& coeff)
    {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(gamma, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Multiplies by x^s.
    ExpMonomialSum shifted(const Rational& s) const
    {
        ExpMonomialSum r(beta_);
        for (const auto& [g, c] : terms_) r.terms_.emplace(Rational(g + s), c);
        return r;
    }

    ExpMonomialSum scaled(const Rational& s) const
    {
        ExpMonomialSum r(beta_);
        if (s == 0) return r;
        for (const auto& [g, c] : terms_) r.terms_.emplace(g, Rational(c * s));
        return r;
    }

    ExpMonomialSum& operator+=(const ExpMonomialSum& o)
    {
        check_compatible(o);
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }

    friend ExpMonomialSum operator+(ExpMonomialSum a, const ExpMonomialSum& b) { return a += b; }

    friend bool operator==(const ExpMonomialSum& a, const ExpMonomialSum& b)
    {
        return a.beta_ == b.beta_ && a.terms_ == b.terms_;
    }

    void check_compatible(const ExpMonomialSum& o) const
    {
        if (o.beta_ != beta_) throw std::invalid_argument("exponential factors differ");
    }

private:
    Rational beta_;
    Terms terms_;
};

/// d/dx (c x^g e^{x^b}) = c g x^{g-1} e^{x^b} + c b x^{g+b-1} e^{x^b}.
inline ExpMonomialSum derivative(const ExpMonomialSum& e)
{
    ExpMonomialSum r(e.beta_exp());
    for (const auto& [g, c] : e.terms()) {
        r.add(Rational(g - 1), Rational(c * g));
        r.add(Rational(g + e.beta_exp() - 1), Rational(c * e.beta_exp()));
    }
    return r;
}

inline ExpMonomialSum derivative(const ExpMonomialSum& e, unsigned times)
{
    ExpMonomialSum r = e;
    for (unsigned i = 0; i < times; ++i) r = derivative(r);
    return r;
}

/// (x d/dx + shift) e.
inline ExpMonomialSum euler_shift(const ExpMonomialSum& e, const Rational& shift)
{
    ExpMonomialSum r(e.beta_exp());
    for (const auto& [g, c] : e.terms()) {
        r.add(g, Rational(c * (g + shift)));
        r.add(Rational(g + e.beta_exp()), Rational(c * e.beta_exp()));
    }
    return r;
}

/// sum_k coeff[k] x^{scale k}, i.e. p(x^scale) as an exponent map (the e^{x^b} factor is implicit).
inline ExpMonomialSum polynomial_in_power(const QPolynomial& p, const Rational& scale, const Rational& beta_exp)
{
    ExpMonomialSum r(beta_exp);
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        r.add(Rational(scale * static_cast<unsigned long>(k)), p.coefficients()[k]);
    return r;
}

/// P_n(x^b) = (-1)^n x^{n-a} e^{-x^b} (d/dx)^n (x^a e^{x^b}).
inline bool verify_T4_first(const Rational& alpha, const Rational& beta, unsigned n)
{
    detail::require_beta(beta);
    const auto d = derivative(ExpMonomialSum::monomial(beta, alpha), n);
    const auto rhs = d.shifted(Rational(Rational(n) - alpha)).scaled(sign_power(n));
    const auto lhs = polynomial_in_power(poly(FamilyParams(alpha, beta), n), beta, beta);
    return lhs == rhs;
}

/// Second route to the first identity, straight from the Dobinski form: with y = x^b,
/// e^{y} P_n(y) = sum_k (-1)^n (a + b k)_n y^k / k!. Compares the coefficients of y^k for k <= kmax.
inline bool verify_T4_first_dobinski(const Rational& alpha, const Rational& beta, unsigned n, unsigned kmax)
{
    detail::require_beta(beta);
    const auto p = poly(FamilyParams(alpha, beta), n);
    for (unsigned k = 0; k <= kmax; ++k) {
        // [y^k] e^y P_n(y) = sum_{j<=min(k,n)} S(n,j) / (k-j)!
        Rational lhs(0);
        for (unsigned j = 0; j <= std::min<unsigned>(k, n); ++j) lhs += p[j] / Rational(factorial(k - j));
        Rational rhs = sign_power(n) * falling(Rational(alpha + beta * k), n) / Rational(factorial(k));
        if (lhs != rhs) return false;
    }
    return true;
}

/// P_n(x^{-b}) = x^{a+1} e^{-x^{-b}} (d/dx)^n (x^{n-1-a} e^{x^{-b}}).
inline bool verify_T4_second(const Rational& alpha, const Rational& beta, unsigned n)
{
    detail::require_beta(beta);
    const Rational nb = -beta;
    const auto d = derivative(ExpMonomialSum::monomial(nb, Rational(Rational(n) - 1 - alpha)), n);
    const auto rhs = d.shifted(Rational(alpha + 1));
    const auto lhs = polynomial_in_power(poly(FamilyParams(alpha, beta), n), nb, nb);
    return lhs == rhs;
}

namespace detail {

/// B_n(lambda + y) as a polynomial in y.
inline QPolynomial shifted_bell(const Rational& lambda, unsigned n)
{
    QPolynomial out;
    const QPolynomial lin{lambda, Rational(1)};
    QPolynomial power = QPolynomial::constant(1);
    for (unsigned k = 0; k <= n; ++k) {
        out += power * stirling2(n, k);
        power *= lin;
    }
    return out;
}

/// sum_j C(n,j) lambda^{n-j} B_j(y) as a polynomial in y.
inline QPolynomial binomial_bell(const Rational& lambda, unsigned n)
{
    QPolynomial out;
    for (unsigned j = 0; j <= n; ++j) {
        QPolynomial b;
        for (unsigned k = 0; k <= j; ++k) b += QPolynomial::monomial(stirling2(j, k), k);
        out += b * Rational(Rational(binom_int(n, j)) * ipow(lambda, n - j));
    }
    return out;
}

/// x^{-a} e^{-x^b} (s x d/dx - a/b + lambda)^n (x^a e^{x^b}) as an exponent map.
inline ExpMonomialSum bell_operator_rhs(const Rational& alpha, const Rational& beta, const Rational& lambda, unsigned n,
                                        const Rational& euler_scale)
{
    // s x d/dx + c  =  s (x d/dx + c/s)
    const Rational shift = (lambda - alpha / beta) / euler_scale;
    auto e = ExpMonomialSum::monomial(beta, alpha);
    for (unsigned i = 0; i < n; ++i) e = euler_shift(e, shift).scaled(euler_scale);
    return e.shifted(Rational(-alpha));
}

} // namespace detail

/// B_n(lambda + x^b) = x^{-a} e^{-x^b} (x d/dx - a/b + lambda)^n (x^a e^{x^b}), checked as stated.
/// Holds when b = 1 and lambda = 0; see verify_bell_operator_corrected.
inline bool verify_bell_operator(const Rational& alpha, const Rational& beta, const Rational& lambda, unsigned n)
{
    detail::require_beta(beta);
    return polynomial_in_power(detail::shifted_bell(lambda, n), beta, beta) ==
           detail::bell_operator_rhs(alpha, beta, lambda, n, Rational(1));
}

/// sum_j C(n,j) lambda^{n-j} B_j(x^b) = x^{-a} e^{-x^b} ((1/b) x d/dx - a/b + lambda)^n (x^a e^{x^b}),
/// valid for every b != 0 and every lambda. At lambda = 0 the left side is B_n(x^b).
inline bool verify_bell_operator_corrected(const Rational& alpha, const Rational& beta, const Rational& lambda,
                                           unsigned n)
{
    detail::require_beta(beta);
    return polynomial_in_power(detail::binomial_bell(lambda, n), beta, beta) ==
           detail::bell_operator_rhs(alpha, beta, lambda, n, Rational(1 / beta));
}

/// sum_k S(d,k) x^k (d/dx)^k e  versus  (x d/dx)^d e.
inline bool verify_euler_operator_expansion(const ExpMonomialSum& seed, unsigned degree)
{
    ExpMonomialSum lhs(seed.beta_exp());
    ExpMonomialSum dk = seed;
    for (unsigned k = 0; k <= degree; ++k) {
        if (k > 0) dk = derivative(dk);
        lhs += dk.shifted(Rational(k)).scaled(stirling2(degree, k));
    }
    ExpMonomialSum rhs = seed;
    for (unsigned i = 0; i < degree; ++i) rhs = euler_shift(rhs, 0);
    return lhs == rhs;
}

} // namespace genbell
