#pragma once
// The two-parameter family P_n^(alpha,beta) with generating function
// (1-t)^alpha exp(x((1-t)^beta - 1)), its named specializations, and the
// basis changes and recurrences connecting them.

#include "genbell/exact.hpp"
#include "genbell/qpolynomial.hpp"
#include "genbell/stirling.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace genbell {

/// (alpha, beta) with beta != 0.
class FamilyParams {
public:
    FamilyParams(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta))
    {
        if (beta_ == 0) throw std::invalid_argument("family parameter beta must be nonzero");
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

private:
    Rational alpha_;
    Rational beta_;
};

inline std::string to_string(const FamilyParams& p)
{
    return "(" + to_string(p.alpha()) + "," + to_string(p.beta()) + ")";
}

/// P_n^(alpha,beta)(x) = sum_k S_{alpha,beta}(n,k) x^k, coefficients from the triangular recurrence.
inline QPolynomial poly(const FamilyParams& params, unsigned n)
{
    return gstirling_table(params.alpha(), params.beta(), n).row_polynomial(n);
}

/// All of P_0..P_nmax from one table.
inline std::vector<QPolynomial> polys(const FamilyParams& params, unsigned nmax)
{
    const auto t = gstirling_table(params.alpha(), params.beta(), nmax);
    std::vector<QPolynomial> out;
    for (unsigned n = 0; n <= nmax; ++n) out.push_back(t.row_polynomial(n));
    return out;
}

/// P_{n+1} = (n - alpha - beta x) P_n - beta x P_n'.
inline QPolynomial lemma1_step(const FamilyParams& params, const QPolynomial& p_n, unsigned n)
{
    const Rational& a = params.alpha();
    const Rational& b = params.beta();
    QPolynomial factor{Rational(Rational(n) - a), Rational(-b)};
    return factor * p_n - (p_n.derivative().shift_up(1) * b);
}

/// Sum_j coeffs[j] * basis[j].
inline QPolynomial combine(std::span<const Rational> coeffs, std::span<const QPolynomial> basis)
{
    if (basis.size() < coeffs.size()) throw std::invalid_argument("basis shorter than coefficient list");
    QPolynomial out;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0) out += basis[j] * coeffs[j];
    return out;
}

namespace detail {

/// e^{-x} sum_{k>=0} w(k) x^k / k!, where |w(k)| <= <c + d k>_n with c >= 0, d > 0.
/// The majorant terms <c + d k>_n |x|^k / k! have a ratio that decreases in k, so once
/// that ratio rho drops below 1 the remaining tail is at most term * rho / (1 - rho).
/// The partial sum is exact; only the final e^{-x} scaling is floating point.
template <typename Weight>
double dobinski_sum(const Rational& x, double epsilon, Weight&& weight, double c, double d, unsigned n)
{
    if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
    const double xd = std::fabs(x.get_d());
    const double scale = std::exp(-x.get_d());
    auto majorant_weight = [&](unsigned k) {
        double r = 1.0;
        for (unsigned i = 0; i < n; ++i) r *= c + d * k + i;
        return r;
    };
    Rational partial(0);
    Rational xpow(1);
    Rational inv_fact(1);
    double power_over_fact = 1.0; // |x|^k / k!
    for (unsigned k = 0;; ++k) {
        partial += weight(k) * xpow * inv_fact;
        if (x == 0) break;
        if (k >= 1) {
            const double rho = majorant_weight(k + 1) / majorant_weight(k) * xd / static_cast<double>(k + 1);
            if (rho < 1.0) {
                const double tail = scale * majorant_weight(k) * power_over_fact * rho / (1.0 - rho);
                if (tail < epsilon / 2) break;
            }
        }
        xpow *= x;
        inv_fact /= static_cast<unsigned long>(k + 1);
        power_over_fact *= xd / static_cast<double>(k + 1);
    }
    return scale * partial.get_d();
}

} // namespace detail

/// Dobinski-type evaluation P_n(x) = e^{-x} sum_k <-alpha-beta k>_n x^k / k!, truncated once
/// the majorized tail drops below epsilon. For x < 0 the same absolute-value majorant is used,
/// which converges more slowly.
inline double eval_dobinski(const FamilyParams& params, unsigned n, const Rational& x, double epsilon)
{
    const Rational& a = params.alpha();
    const Rational& b = params.beta();
    // |<-a-bk>_n| <= <|a| + |b|k>_n
    return detail::dobinski_sum(
        x, epsilon, [&](unsigned k) { return rising(-a - b * k, n); }, std::fabs(a.get_d()),
        std::fabs(b.get_d()), n);
}

/// Bell polynomial B_n(x) = sum_k S(n,k) x^k.
inline QPolynomial bell_poly(unsigned n)
{
    std::vector<Rational> c;
    for (unsigned k = 0; k <= n; ++k) c.push_back(stirling2(n, k));
    return QPolynomial(std::move(c));
}

inline std::vector<QPolynomial> bell_polys(unsigned nmax)
{
    std::vector<QPolynomial> out;
    for (unsigned n = 0; n <= nmax; ++n) out.push_back(bell_poly(n));
    return out;
}

/// Coefficients c_j with P_n = sum_j c_j B_j(x):
/// c_j = beta^j sum_{k=j..n} (-1)^k |s(n,k)| C(k,j) alpha^{k-j}.
/// Obtained by inverting the forward identity below with first-kind Stirling numbers.
inline std::vector<Rational> to_bell_basis(const FamilyParams& params, unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational inner(0);
        for (unsigned k = j; k <= n; ++k)
            inner += sign_power(k) * abs(stirling1(n, k)) * Rational(binom_int(k, j)) * ipow(params.alpha(), k - j);
        c[j] = ipow(params.beta(), j) * inner;
    }
    return c;
}

/// The same expansion without the C(k,j) factor:
/// c_j = beta^j sum_{k=j..n} (-1)^k |s(n,k)| alpha^{k-j}. Agrees with to_bell_basis only
/// when n <= 1 or alpha = 0.
inline std::vector<Rational> to_bell_basis_without_binomial(const FamilyParams& params, unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational inner(0);
        for (unsigned k = j; k <= n; ++k) inner += sign_power(k) * abs(stirling1(n, k)) * ipow(params.alpha(), k - j);
        c[j] = ipow(params.beta(), j) * inner;
    }
    return c;
}

/// sum_k (-1)^k S(n,k) P_k = sum_k C(n,k) alpha^{n-k} beta^k B_k, for every n <= nmax.
inline bool verify_P2_forward(const FamilyParams& params, unsigned nmax)
{
    const auto p = polys(params, nmax);
    const auto bell = bell_polys(nmax);
    for (unsigned n = 0; n <= nmax; ++n) {
        QPolynomial lhs, rhs;
        for (unsigned k = 0; k <= n; ++k) {
            lhs += p[k] * Rational(sign_power(k) * stirling2(n, k));
            rhs += bell[k] * Rational(Rational(binom_int(n, k)) * ipow(params.alpha(), n - k) * ipow(params.beta(), k));
        }
        if (lhs != rhs) return false;
    }
    return true;
}

/// Row n of the inverse triangle: x^n = sum_k S~(n,k) P_k(x).
inline std::vector<Rational> monomial_to_P(const FamilyParams& params, unsigned n)
{
    std::vector<Rational> c(n + 1);
    for (unsigned k = 0; k <= n; ++k) c[k] = gstirling_inverse(params.alpha(), params.beta(), n, k);
    return c;
}

/// Connection coefficients P_n^(from) = sum_j c_j P_j^(to) with
/// c_j = (-1)^j S_{alpha - (alpha'/beta') beta, beta/beta'}(n,j).
inline std::vector<Rational> rebase(const FamilyParams& from, const FamilyParams& to, unsigned n)
{
    const auto [ma, mb] = connection_params(from.alpha(), from.beta(), to.alpha(), to.beta());
    const auto t = gstirling_table(ma, mb, n);
    std::vector<Rational> c(n + 1);
    for (unsigned j = 0; j <= n; ++j) c[j] = sign_power(j) * t(n, j);
    return c;
}

/// Which sign rule makes P_n^(a,b) = sum_k sign * L(n,k) P_k^(-a,-b) hold for every n <= nmax.
/// Candidates are tried in the order summation index (-1)^k, free index (-1)^n, no sign.
inline std::optional<SignPlacement> resolve_lah_rebase_sign(const FamilyParams& params, unsigned nmax)
{
    const auto p = polys(params, nmax);
    const auto q = polys(FamilyParams(Rational(-params.alpha()), Rational(-params.beta())), nmax);
    for (auto placement : {SignPlacement::SummationIndex, SignPlacement::FreeIndex, SignPlacement::None}) {
        bool ok = true;
        for (unsigned n = 0; n <= nmax && ok; ++n) {
            QPolynomial sum;
            for (unsigned k = 0; k <= n; ++k) {
                Rational s = placement == SignPlacement::SummationIndex ? sign_power(k)
                             : placement == SignPlacement::FreeIndex    ? sign_power(n)
                                                                        : Rational(1);
                sum += q[k] * Rational(s * lah(n, k));
            }
            ok = sum == p[n];
        }
        if (ok) return placement;
    }
    return std::nullopt;
}

/// P_{n+m} = sum_{j<=n} sum_{k<=m} C(n,j) <m - beta k>_{n-j} S(m,k) x^k P_j.
inline QPolynomial addition(const FamilyParams& params, unsigned n, unsigned m)
{
    const auto t = gstirling_table(params.alpha(), params.beta(), std::max(n, m));
    QPolynomial out;
    for (unsigned j = 0; j <= n; ++j) {
        const QPolynomial pj = t.row_polynomial(j);
        for (unsigned k = 0; k <= m; ++k) {
            Rational c = Rational(binom_int(n, j)) * rising(Rational(Rational(m) - params.beta() * k), n - j) * t(m, k);
            if (c != 0) out += pj.shift_up(k) * c;
        }
    }
    return out;
}

/// The m = 1 case written out: P_{n+1} = -sum_j C(n,j) (alpha (n-j)! + beta x <1-beta>_{n-j}) P_j.
inline QPolynomial addition_m1(const FamilyParams& params, unsigned n)
{
    const auto p = polys(params, n);
    QPolynomial out;
    for (unsigned j = 0; j <= n; ++j) {
        QPolynomial factor{Rational(params.alpha() * Rational(factorial(n - j))),
                           Rational(params.beta() * rising(Rational(1 - params.beta()), n - j))};
        out -= factor * p[j] * Rational(binom_int(n, j));
    }
    return out;
}

struct RisingExpansion {
    QPolynomial lhs; ///< <-alpha - beta x>_n
    QPolynomial rhs; ///< sum_j S(n,j) (x)_j
    bool equal() const { return lhs == rhs; }
};

inline RisingExpansion rising_expansion(const FamilyParams& params, unsigned n)
{
    const auto t = gstirling_table(params.alpha(), params.beta(), n);
    RisingExpansion r;
    r.lhs = rising_in_x(-params.alpha(), -params.beta(), n);
    for (unsigned j = 0; j <= n; ++j) r.rhs += falling_in_x(j) * t(n, j);
    return r;
}

inline const FamilyParams& u_params()
{
    static const FamilyParams p(Rational(-1, 2), Rational(-1, 2));
    return p;
}

inline const FamilyParams& v_params()
{
    static const FamilyParams p(Rational(-3, 2), Rational(-1, 2));
    return p;
}

/// U_n = P_n^(-1/2,-1/2).
inline QPolynomial family_U(unsigned n) { return poly(u_params(), n); }

/// V_n = P_n^(-3/2,-1/2).
inline QPolynomial family_V(unsigned n) { return poly(v_params(), n); }

inline FamilyParams laguerre_params(const Rational& lambda)
{
    return {Rational(-lambda - 1), Rational(-1)};
}

inline constexpr const char* laguerre_convention_note =
    "L_n^(lambda)(x) = P_n^(-lambda-1,-1)(x)/n!; its generating function is "
    "(1-t)^(-lambda-1) exp(+xt/(1-t)), so the classical Laguerre polynomial is this one evaluated at -x";

/// L_n^(lambda) = P_n^(-lambda-1,-1) / n!. See laguerre_convention_note for the sign of x.
inline QPolynomial family_laguerre(const Rational& lambda, unsigned n)
{
    return poly(laguerre_params(lambda), n) * Rational(Integer(1), factorial(n));
}

inline FamilyParams assoc_lah_params(long m)
{
    if (m < 1) throw std::invalid_argument("associated Lah order m must be >= 1");
    return {Rational(0), Rational(-m)};
}

/// Associated Lah polynomial P_n^(0,-m), m >= 1.
inline QPolynomial family_assoc_lah(long m, unsigned n)
{
    return poly(assoc_lah_params(m), n);
}

} // namespace genbell
