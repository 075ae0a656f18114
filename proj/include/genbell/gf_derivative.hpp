#pragma once

#include "genbell/series.hpp"
#include "genbell/stirling.hpp"

#include <stdexcept>

namespace genbell {

/// Compares (d/dt)^m F(t,x) with F(t,x) (1-t)^{-m} P_m(x (1-t)^beta) as formal series.
/// Differentiation costs one order per derivative, so the comparison is made at order - m.
inline bool verify_T2(const Rational& alpha, const Rational& beta, unsigned m, std::size_t order)
{
    detail::require_beta(beta);
    if (m > order) throw std::invalid_argument("derivative order m exceeds series order");
    const QXSeries f = family_gf(alpha, beta, order);
    QXSeries lhs = f;
    for (unsigned i = 0; i < m; ++i) lhs = lhs.derivative_t();

    const std::size_t cmp = order - m;
    const GStirlingTable t = gstirling_table(alpha, beta, m);
    QXSeries pm(cmp);
    for (unsigned k = 0; k <= m; ++k) {
        if (t(m, k) == 0) continue;
        pm += binomial_series(Rational(beta * k), cmp) * QPolynomial::monomial(t(m, k), k);
    }
    const QXSeries rhs = series_mul(series_mul(f.truncated(cmp), binomial_series(Rational(-static_cast<long>(m)), cmp)), pm);
    return lhs == rhs;
}

} // namespace genbell
