#pragma once
// Coefficient triangles: generalized Stirling numbers S_{a,b}(n,k), their
// inverse, classical Stirling numbers, Lah / r-Lah numbers and partial
// (r-)Bell polynomials.

#include "genbell/exact.hpp"
#include "genbell/qpolynomial.hpp"
#include "genbell/series.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genbell {

namespace detail {

inline void require_k_le_n(unsigned n, unsigned k)
{
    if (k > n) throw std::invalid_argument("k > n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

inline void require_beta(const Rational& beta)
{
    if (beta == 0) throw std::invalid_argument("beta must be nonzero");
}

} // namespace detail

/// Lower-triangular table of S_{alpha,beta}(n,k), 0 <= k <= n <= nmax.
class GStirlingTable {
public:
    GStirlingTable(Rational alpha, Rational beta, std::vector<std::vector<Rational>> rows)
        : alpha_(std::move(alpha)), beta_(std::move(beta)), rows_(std::move(rows))
    {
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    unsigned nmax() const { return static_cast<unsigned>(rows_.size() - 1); }

    /// Entry (n, k); zero outside the triangle.
    Rational operator()(unsigned n, unsigned k) const
    {
        if (n > nmax()) throw std::out_of_range("row beyond table nmax");
        return k <= n ? rows_[n][k] : Rational(0);
    }

    std::span<const Rational> row(unsigned n) const { return rows_.at(n); }

    /// Row n as the polynomial sum_k S(n,k) x^k.
    QPolynomial row_polynomial(unsigned n) const { return QPolynomial(rows_.at(n)); }

private:
    Rational alpha_;
    Rational beta_;
    std::vector<std::vector<Rational>> rows_;
};

/// S_{alpha,beta}(n,k) = (1/k!) sum_j (-1)^{k-j} C(k,j) <-alpha-beta j>_n.
inline Rational gstirling_explicit(const Rational& alpha, const Rational& beta, unsigned n, unsigned k)
{
    detail::require_k_le_n(n, k);
    Rational sum(0);
    for (unsigned j = 0; j <= k; ++j) {
        Rational term = rising(-alpha - beta * j, n);
        term *= Rational(binom_int(k, j));
        if ((k - j) % 2) sum -= term;
        else sum += term;
    }
    sum /= Rational(factorial(k));
    return sum;
}

/// Builds the triangle from S(0,0) = 1 by
/// S(m+1,j) = (m - alpha - beta j) S(m,j) - beta S(m,j-1).
inline GStirlingTable gstirling_table(const Rational& alpha, const Rational& beta, unsigned nmax)
{
    std::vector<std::vector<Rational>> rows(nmax + 1);
    rows[0] = {Rational(1)};
    for (unsigned m = 0; m < nmax; ++m) {
        const auto& prev = rows[m];
        auto& next = rows[m + 1];
        next.assign(m + 2, Rational(0));
        for (unsigned j = 0; j <= m + 1; ++j) {
            Rational v(0);
            if (j <= m) v += (Rational(m) - alpha - beta * j) * prev[j];
            if (j >= 1) v -= beta * prev[j - 1];
            next[j] = v;
        }
    }
    return {alpha, beta, std::move(rows)};
}

/// Third route: S(n,k) = n! [t^n] (1/k!)((1-t)^beta - 1)^k (1-t)^alpha, by series expansion.
inline GStirlingTable gstirling_series(const Rational& alpha, const Rational& beta, unsigned nmax)
{
    std::vector<std::vector<Rational>> rows(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n) rows[n].assign(n + 1, Rational(0));
    const QXSeries base = binomial_series(beta, nmax) - QXSeries::one(nmax);
    QXSeries power = binomial_series(alpha, nmax);
    for (unsigned k = 0; k <= nmax; ++k) {
        if (k > 0) {
            power = series_mul(power, base);
            power *= Rational(1, k);
        }
        for (unsigned n = k; n <= nmax; ++n) rows[n][k] = power[n][0] * Rational(factorial(n));
    }
    return {alpha, beta, std::move(rows)};
}

/// Inverse triangle: S~_{alpha,beta}(n,k) = (-1)^{n-k} S_{-alpha/beta, 1/beta}(n,k).
inline Rational gstirling_inverse(const Rational& alpha, const Rational& beta, unsigned n, unsigned k)
{
    detail::require_beta(beta);
    detail::require_k_le_n(n, k);
    Rational a2 = -alpha / beta;
    Rational b2 = 1 / beta;
    return sign_power(n - k) * gstirling_explicit(a2, b2, n, k);
}

inline GStirlingTable gstirling_inverse_table(const Rational& alpha, const Rational& beta, unsigned nmax)
{
    detail::require_beta(beta);
    GStirlingTable t = gstirling_table(Rational(-alpha / beta), Rational(1 / beta), nmax);
    std::vector<std::vector<Rational>> rows(nmax + 1);
    for (unsigned n = 0; n <= nmax; ++n)
        for (unsigned k = 0; k <= n; ++k) rows[n].push_back(sign_power(n - k) * t(n, k));
    return {alpha, beta, std::move(rows)};
}

/// Signed Stirling numbers of the first kind: s(n+1,k) = s(n,k-1) - n s(n,k).
inline Rational stirling1(unsigned n, unsigned k)
{
    detail::require_k_le_n(n, k);
    std::vector<Rational> row{Rational(1)};
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Rational> next(m + 2, Rational(0));
        for (unsigned j = 0; j <= m + 1; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j <= m) next[j] -= row[j] * m;
        }
        row = std::move(next);
    }
    return row[k];
}

/// Stirling numbers of the second kind: S(n+1,k) = S(n,k-1) + k S(n,k).
inline Rational stirling2(unsigned n, unsigned k)
{
    detail::require_k_le_n(n, k);
    std::vector<Rational> row{Rational(1)};
    for (unsigned m = 0; m < n; ++m) {
        std::vector<Rational> next(m + 2, Rational(0));
        for (unsigned j = 0; j <= m + 1; ++j) {
            if (j >= 1) next[j] += row[j - 1];
            if (j <= m) next[j] += row[j] * j;
        }
        row = std::move(next);
    }
    return row[k];
}

/// r-Lah number L_r(n,k) = (n-r)! [t^{n-r}] (1/(k-r)!) (t/(1-t))^{k-r} (1-t)^{-2r}.
/// Zero when k < r.
inline Rational rlah(unsigned r, unsigned n, unsigned k)
{
    detail::require_k_le_n(n, k);
    if (k < r) return 0;
    const unsigned nn = n - r, kk = k - r;
    // t/(1-t) = (1-t)^{-1} - 1
    QXSeries base = binomial_series(-1, nn) - QXSeries::one(nn);
    QXSeries s = series_mul(series_pow(base, kk), binomial_series(Rational(-2 * static_cast<long>(r)), nn));
    Rational v = s[nn][0];
    v *= Rational(factorial(nn));
    v /= Rational(factorial(kk));
    return v;
}

/// Unsigned Lah number, the r = 0 case of rlah.
inline Rational lah(unsigned n, unsigned k)
{
    return rlah(0, n, k);
}

/// Partial r-Bell polynomial B^{(r)}_{n+r,k+r}(a; b):
/// n! [t^n] (1/k!) (sum_{j>=1} a_j t^j/j!)^k (sum_{j>=0} b_{j+1} t^j/j!)^r.
/// a[i] holds a_{i+1} (at least n entries); b[i] holds b_{i+1} (at least n+1 entries when r > 0).
inline Rational partial_r_bell(unsigned r, unsigned n, unsigned k, std::span<const Rational> a,
                               std::span<const Rational> b)
{
    detail::require_k_le_n(n, k);
    if (a.size() < n) throw std::invalid_argument("sequence a needs at least n terms");
    if (r > 0 && b.size() < n + 1) throw std::invalid_argument("sequence b needs at least n+1 terms");
    QXSeries as(n), bs(n);
    for (unsigned j = 1; j <= n; ++j) as[j] = QPolynomial::constant(a[j - 1] / Rational(factorial(j)));
    QXSeries prod = series_pow(as, k);
    if (r > 0) {
        for (unsigned j = 0; j <= n; ++j) bs[j] = QPolynomial::constant(b[j] / Rational(factorial(j)));
        prod = series_mul(prod, series_pow(bs, r));
    }
    Rational v = prod[n][0];
    v *= Rational(factorial(n));
    v /= Rational(factorial(k));
    return v;
}

/// Partial Bell polynomial B_{n,k}(a), the r = 0 case.
inline Rational partial_bell(unsigned n, unsigned k, std::span<const Rational> a)
{
    return partial_r_bell(0, n, k, a, {});
}

/// Terms g(1), ..., g(count) of a sequence generator, as a list.
template <typename Gen>
std::vector<Rational> sequence_terms(unsigned count, Gen&& g)
{
    std::vector<Rational> out;
    out.reserve(count);
    for (unsigned j = 1; j <= count; ++j) out.push_back(g(j));
    return out;
}

/// Checks S_{r alpha, beta}(n,k) = B^{(r)}_{n+r,k+r}(<-beta>_j; <-alpha>_{j-1}) for all k <= n <= nmax.
inline bool verify_rbell_connection(const Rational& alpha, const Rational& beta, unsigned r, unsigned nmax)
{
    detail::require_beta(beta);
    const auto a = sequence_terms(nmax, [&](unsigned j) { return rising(-beta, j); });
    const auto b = sequence_terms(nmax + 1, [&](unsigned j) { return rising(-alpha, j - 1); });
    const GStirlingTable t = gstirling_table(Rational(alpha * r), beta, nmax);
    for (unsigned n = 0; n <= nmax; ++n)
        for (unsigned k = 0; k <= n; ++k)
            if (t(n, k) != partial_r_bell(r, n, k, std::span(a).first(n), std::span(b).first(n + 1))) return false;
    return true;
}

/// Where the (-1)^j factor of the connection formula sits.
enum class SignPlacement {
    SummationIndex, ///< (-1)^j with j the index being summed over
    FreeIndex,      ///< (-1) raised to the free (outer) index
    None,           ///< no sign factor at all
};

inline std::string to_string(SignPlacement s)
{
    switch (s) {
    case SignPlacement::SummationIndex: return "summation-index";
    case SignPlacement::FreeIndex: return "free-index";
    case SignPlacement::None: return "none";
    }
    return "?";
}

struct CompositionReport {
    bool coefficient_identity = false; ///< S_{a,b}(n,k) = sum_j sign * S_{mid}(n,j) S_{a',b'}(j,k)
    bool rising_identity = false;      ///< <-a-bx>_n = sum_j sign * S_{mid}(n,j) <-a'-b'x>_j
    unsigned first_bad_n = 0;          ///< first failing (n,k) when coefficient_identity is false
    unsigned first_bad_k = 0;

    bool ok() const { return coefficient_identity && rising_identity; }
};

/// Parameters of the middle table in the connection formula: (alpha - (alpha'/beta') beta, beta/beta').
inline std::pair<Rational, Rational> connection_params(const Rational& alpha, const Rational& beta,
                                                       const Rational& alpha2, const Rational& beta2)
{
    detail::require_beta(beta2);
    return {Rational(alpha - alpha2 / beta2 * beta), Rational(beta / beta2)};
}

/// <c + d x>_n as a polynomial in x.
inline QPolynomial rising_in_x(const Rational& c, const Rational& d, unsigned n)
{
    QPolynomial p = QPolynomial::constant(1);
    for (unsigned i = 0; i < n; ++i) p *= QPolynomial{Rational(c + i), d};
    return p;
}

/// (x)_n as a polynomial in x.
inline QPolynomial falling_in_x(unsigned n)
{
    QPolynomial p = QPolynomial::constant(1);
    for (unsigned i = 0; i < n; ++i) p *= QPolynomial{Rational(-static_cast<long>(i)), Rational(1)};
    return p;
}

/// Evaluates both composition identities with the sign factor placed as requested.
inline CompositionReport composition_check(const Rational& alpha, const Rational& beta, const Rational& alpha2,
                                           const Rational& beta2, unsigned nmax, SignPlacement placement)
{
    const auto [ma, mb] = connection_params(alpha, beta, alpha2, beta2);
    const GStirlingTable mid = gstirling_table(ma, mb, nmax);
    const GStirlingTable lhs = gstirling_table(alpha, beta, nmax);
    const GStirlingTable right = gstirling_table(alpha2, beta2, nmax);
    auto sign = [&](unsigned summed, unsigned free_index) {
        switch (placement) {
        case SignPlacement::SummationIndex: return sign_power(summed);
        case SignPlacement::FreeIndex: return sign_power(free_index);
        case SignPlacement::None: return Rational(1);
        }
        return Rational(1);
    };

    CompositionReport rep;
    rep.coefficient_identity = true;
    for (unsigned n = 0; n <= nmax && rep.coefficient_identity; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            Rational sum(0);
            for (unsigned j = k; j <= n; ++j) sum += sign(j, k) * mid(n, j) * right(j, k);
            if (sum != lhs(n, k)) {
                rep.coefficient_identity = false;
                rep.first_bad_n = n;
                rep.first_bad_k = k;
                break;
            }
        }
    }
    rep.rising_identity = true;
    for (unsigned n = 0; n <= nmax; ++n) {
        QPolynomial sum;
        for (unsigned j = 0; j <= n; ++j)
            sum += rising_in_x(-alpha2, -beta2, j) * Rational(sign(j, n) * mid(n, j));
        if (sum != rising_in_x(-alpha, -beta, n)) {
            rep.rising_identity = false;
            break;
        }
    }
    return rep;
}

struct CompositionVerdict {
    bool ok = false;
    SignPlacement confirmed = SignPlacement::None;
    std::vector<std::pair<SignPlacement, CompositionReport>> candidates;
};

/// Tests every sign placement and reports which one the exact comparison confirms.
inline CompositionVerdict verify_composition(const Rational& alpha, const Rational& beta, const Rational& alpha2,
                                             const Rational& beta2, unsigned nmax)
{
    CompositionVerdict v;
    for (auto p : {SignPlacement::SummationIndex, SignPlacement::FreeIndex, SignPlacement::None}) {
        auto rep = composition_check(alpha, beta, alpha2, beta2, nmax, p);
        if (rep.ok() && !v.ok) {
            v.ok = true;
            v.confirmed = p;
        }
        v.candidates.emplace_back(p, rep);
    }
    return v;
}

} // namespace genbell
