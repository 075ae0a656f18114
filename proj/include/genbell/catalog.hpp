#pragma once
// Identity catalog: every checked statement about P_n^(alpha,beta), its
// coefficient triangle and specializations, as named checks that emit one
// PASS/FAIL line per (identity, parameters, n). The CLI `verify` command and
// the acceptance suite both run from here.

#include "genbell/genbell.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace genbell::catalog {

struct Check {
    std::string identity;
    std::string subject; ///< parameters and degree, e.g. "alpha=1 beta=-1 n=3"
    bool pass = false;
    std::string detail;

    std::string line() const
    {
        std::string s = (pass ? "PASS " : "FAIL ") + identity;
        if (!subject.empty()) s += " " + subject;
        if (!detail.empty()) s += " " + detail;
        return s;
    }
};

class Report {
public:
    void add(std::string identity, std::string subject, bool pass, std::string detail = {})
    {
        checks_.push_back({std::move(identity), std::move(subject), pass, std::move(detail)});
    }

    /// Informational line, always PASS; used to log resolved conventions.
    void note(std::string identity, std::string detail) { add(std::move(identity), {}, true, std::move(detail)); }

    const std::vector<Check>& checks() const { return checks_; }
    std::size_t failures() const
    {
        std::size_t f = 0;
        for (const auto& c : checks_) f += c.pass ? 0 : 1;
        return f;
    }
    bool ok() const { return failures() == 0; }

private:
    std::vector<Check> checks_;
};

inline std::string subject(const FamilyParams& p)
{
    return "alpha=" + to_string(p.alpha()) + " beta=" + to_string(p.beta());
}

inline std::string subject(const FamilyParams& p, unsigned n)
{
    return subject(p) + " n=" + std::to_string(n);
}

/// alpha in {-2,-3/2,-1,-1/2,0,1/3,1/2,1,2}, beta in {-3,-2,-1,-1/2,1/2,1,2}.
inline std::vector<FamilyParams> acceptance_grid()
{
    const std::vector<Rational> alphas{-2, Rational(-3, 2), -1, Rational(-1, 2), 0, Rational(1, 3), Rational(1, 2), 1, 2};
    const std::vector<Rational> betas{-3, -2, -1, Rational(-1, 2), Rational(1, 2), 1, 2};
    std::vector<FamilyParams> g;
    for (const auto& a : alphas)
        for (const auto& b : betas) g.emplace_back(a, b);
    return g;
}

// ---------------------------------------------------------------------------
// Single-parameter checks

/// Explicit alternating sum, triangular recurrence and series extraction agree entry-wise.
inline void check_routes(Report& r, const FamilyParams& p, unsigned nmax)
{
    const auto rec = gstirling_table(p.alpha(), p.beta(), nmax);
    const auto ser = gstirling_series(p.alpha(), p.beta(), nmax);
    const auto gf = gf_polynomials(p.alpha(), p.beta(), nmax);
    for (unsigned n = 0; n <= nmax; ++n) {
        bool ok = gf[n] == rec.row_polynomial(n);
        for (unsigned k = 0; k <= n && ok; ++k) {
            const Rational e = gstirling_explicit(p.alpha(), p.beta(), n, k);
            ok = e == rec(n, k) && e == ser(n, k);
        }
        r.add("routes", subject(p, n), ok);
    }
}

/// P_0, P_1, P_2 closed forms and the listed P_3(-x/beta), from both the recurrence and the series.
inline void check_first_values(Report& r, const FamilyParams& p)
{
    const Rational& a = p.alpha();
    const Rational& b = p.beta();
    const auto rec = polys(p, 3);
    const auto gf = gf_polynomials(a, b, 3);
    const QPolynomial p0 = QPolynomial::constant(1);
    const QPolynomial p1{Rational(-a), Rational(-b)};
    const QPolynomial p2{Rational(a * (a - 1)), Rational(b * (2 * a + b - 1)), Rational(b * b)};
    const QPolynomial p3_scaled{Rational(-falling(a, 3)),
                                Rational(3 * a * a + 3 * a * b - 6 * a + b * b - 3 * b + 2),
                                Rational(-3 * (a + b - 1)), Rational(1)};
    const Rational s = -1 / b;
    r.add("first-values", subject(p, 0), rec[0] == p0 && gf[0] == p0);
    r.add("first-values", subject(p, 1), rec[1] == p1 && gf[1] == p1);
    r.add("first-values", subject(p, 2), rec[2] == p2 && gf[2] == p2);
    r.add("first-values", subject(p, 3), rec[3].scale_argument(s) == p3_scaled && gf[3].scale_argument(s) == p3_scaled,
          "P3(-x/beta)");
}

inline void check_lemma1(Report& r, const FamilyParams& p, unsigned nmax)
{
    const auto ref = polys(p, nmax);
    QPolynomial cur = QPolynomial::constant(1);
    r.add("l1", subject(p, 0), cur == ref[0]);
    for (unsigned n = 0; n < nmax; ++n) {
        cur = lemma1_step(p, cur, n);
        r.add("l1", subject(p, n + 1), cur == ref[n + 1]);
    }
}

/// Inverse triangle times the triangle is the identity; x^n rebuilt from P_0..P_n.
inline void check_p5(Report& r, const FamilyParams& p, unsigned nmax)
{
    const auto s = gstirling_table(p.alpha(), p.beta(), nmax);
    const auto ps = polys(p, nmax);
    for (unsigned n = 0; n <= nmax; ++n) {
        std::vector<Rational> inv_row = monomial_to_P(p, n);
        bool ok = true;
        for (unsigned k = 0; k <= n && ok; ++k) {
            Rational sum(0);
            for (unsigned j = k; j <= n; ++j) sum += inv_row[j] * s(j, k);
            ok = sum == (n == k ? Rational(1) : Rational(0));
        }
        const bool rebuilt = combine(inv_row, ps) == QPolynomial::monomial(1, n);
        r.add("p5", subject(p, n), ok && rebuilt);
    }
}

/// Bell-basis forward identity and the Bell-basis round trip.
inline void check_p2(Report& r, const FamilyParams& p, unsigned nmax)
{
    r.add("p2-forward", subject(p) + " nmax=" + std::to_string(nmax), verify_P2_forward(p, nmax));
    const auto bell = bell_polys(nmax);
    const auto ps = polys(p, nmax);
    for (unsigned n = 0; n <= nmax; ++n) r.add("p2-roundtrip", subject(p, n), combine(to_bell_basis(p, n), bell) == ps[n]);
}

inline void check_p3(Report& r, const FamilyParams& p, unsigned rr, unsigned nmax)
{
    r.add("p3", subject(p) + " r=" + std::to_string(rr) + " nmax=" + std::to_string(nmax),
          verify_rbell_connection(p.alpha(), p.beta(), rr, nmax));
}

/// Addition formula for all n + m <= total, plus its two one-step specializations.
inline void check_c3(Report& r, const FamilyParams& p, unsigned total)
{
    const auto ps = polys(p, total);
    const auto t = gstirling_table(p.alpha(), p.beta(), total);
    for (unsigned s = 0; s <= total; ++s) {
        bool ok = true;
        for (unsigned n = 0; n <= s && ok; ++n) ok = addition(p, n, s - n) == ps[s];
        r.add("c3", subject(p, s), ok, "all n+m=" + std::to_string(s));
    }
    // n = 1: the double sum written coefficient-wise is the triangular recurrence
    for (unsigned m = 0; m < total; ++m) {
        std::vector<Rational> row(m + 2);
        for (unsigned j = 0; j <= m + 1; ++j) {
            Rational v = (Rational(m) - p.alpha() - p.beta() * j) * t(m, j);
            if (j >= 1) v -= p.beta() * t(m, j - 1);
            row[j] = v;
        }
        const bool ok = addition(p, 1, m) == QPolynomial(row) && QPolynomial(row) == t.row_polynomial(m + 1);
        r.add("c3-recurrence", subject(p, m + 1), ok);
    }
    for (unsigned n = 0; n < total; ++n) r.add("c3-m1", subject(p, n + 1), addition_m1(p, n) == ps[n + 1]);
}

inline void check_t2(Report& r, const FamilyParams& p, unsigned mmax, unsigned order)
{
    for (unsigned m = 0; m <= mmax; ++m)
        r.add("t2", subject(p) + " m=" + std::to_string(m) + " order=" + std::to_string(order),
              verify_T2(p.alpha(), p.beta(), m, order));
}

inline void check_t4(Report& r, const FamilyParams& p, unsigned nmax)
{
    for (unsigned n = 0; n <= nmax; ++n) {
        const bool first = verify_T4_first(p.alpha(), p.beta(), n);
        const bool remark = verify_T4_first_dobinski(p.alpha(), p.beta(), n, n + 3);
        const bool second = verify_T4_second(p.alpha(), p.beta(), n);
        r.add("t4", subject(p, n), first && remark && second);
    }
}

/// The operator representation of B_n(lambda + x^beta) as stated, and the corrected form
/// (Euler operator scaled by 1/beta, left side sum_j C(n,j) lambda^{n-j} B_j(x^beta)).
inline void check_bell_operator(Report& r, const FamilyParams& p, const Rational& lambda, unsigned nmax)
{
    for (unsigned n = 0; n <= nmax; ++n) {
        const std::string subj = subject(p, n) + " lambda=" + to_string(lambda);
        r.add("bell-op", subj, verify_bell_operator(p.alpha(), p.beta(), lambda, n));
        r.add("bell-op-corrected", subj, verify_bell_operator_corrected(p.alpha(), p.beta(), lambda, n));
    }
}

inline void check_rebase(Report& r, const FamilyParams& from, const FamilyParams& to, unsigned nmax)
{
    const auto target = polys(to, nmax);
    const auto source = polys(from, nmax);
    for (unsigned n = 0; n <= nmax; ++n)
        r.add("p4", subject(from, n) + " to=" + to_string(to), combine(rebase(from, to, n), target) == source[n]);
}

/// Composition corollary; logs the sign placement the exact comparison confirms.
inline std::optional<SignPlacement> check_composition(Report& r, const FamilyParams& p, const FamilyParams& q, unsigned nmax)
{
    const auto v = verify_composition(p.alpha(), p.beta(), q.alpha(), q.beta(), nmax);
    std::string detail = "sign=" + (v.ok ? to_string(v.confirmed) : std::string("unresolved"));
    for (const auto& [placement, rep] : v.candidates)
        if (!rep.ok()) detail += " rejects=" + to_string(placement);
    r.add("composition", subject(p) + " via=" + to_string(q) + " nmax=" + std::to_string(nmax), v.ok, detail);
    return v.ok ? std::optional(v.confirmed) : std::nullopt;
}

inline std::optional<SignPlacement> check_p4_lah(Report& r, const FamilyParams& p, unsigned nmax)
{
    const auto s = resolve_lah_rebase_sign(p, nmax);
    r.add("p4-lah", subject(p) + " nmax=" + std::to_string(nmax), s.has_value(),
          "sign=" + (s ? to_string(*s) : std::string("unresolved")));
    return s;
}

inline void check_c4(Report& r, const FamilyParams& p, unsigned nmax)
{
    for (unsigned n = 0; n <= nmax; ++n) r.add("c4", subject(p, n), rising_expansion(p, n).equal());
}

/// Real-rootedness wherever the region theorem asserts it; other degrees are not checked.
inline void check_t3(Report& r, const FamilyParams& p, unsigned nmax)
{
    const Region region = classify(p);
    const unsigned limit = asserted_degree_limit(p, nmax);
    if (limit == 0) {
        r.add("t3", subject(p), true, "region=" + to_string(region) + " nothing asserted");
        return;
    }
    const auto ps = polys(p, limit);
    for (unsigned n = 1; n <= limit; ++n) r.add("t3", subject(p, n), all_roots_real(ps[n]), "region=" + to_string(region));
}

inline void check_c1(Report& r, const FamilyParams& p, unsigned nmax)
{
    const auto t = gstirling_table(p.alpha(), p.beta(), nmax);
    for (unsigned n = 2; n <= nmax; ++n) {
        bool nonneg = true;
        for (unsigned k = 0; k <= n; ++k) nonneg = nonneg && t(n, k) >= 0;
        r.add("c1", subject(p, n), check_newton_logconcave(p, n) && nonneg);
    }
}

// ---------------------------------------------------------------------------
// Specializations

/// Absolute tolerance for Dobinski series against exact values; the series itself runs to 1e-13.
inline constexpr double dobinski_tolerance = 1e-10;
inline constexpr double dobinski_epsilon = 1e-13;

namespace detail {

/// |Dobinski value - exact value| <= tol at each sample point.
template <typename Weight>
bool dobinski_matches(const QPolynomial& exact, Weight&& w, double c, double d, unsigned n, const Rational& scale)
{
    for (const Rational& x : {Rational(1, 2), Rational(1), Rational(2)}) {
        const double approx = genbell::detail::dobinski_sum(x, dobinski_epsilon, w, c, d, n) * scale.get_d();
        if (std::fabs(approx - exact(x).get_d()) > dobinski_tolerance) return false;
    }
    return true;
}

} // namespace detail

/// U_n and V_n against their Dobinski, Bell-basis, r-Bell and generating-function displays.
inline void check_special_uv(Report& r, unsigned nmax)
{
    const auto ugf = gf_polynomials(Rational(-1, 2), Rational(-1, 2), nmax);
    const auto vgf = gf_polynomials(Rational(-3, 2), Rational(-1, 2), nmax);
    const auto bell = bell_polys(nmax);
    const auto half = sequence_terms(nmax + 1, [](unsigned j) { return rising(Rational(1, 2), j); });
    const auto half_shift = sequence_terms(nmax + 1, [](unsigned j) { return rising(Rational(1, 2), j - 1); });
    const auto three_half_shift = sequence_terms(nmax + 1, [](unsigned j) { return rising(Rational(3, 2), j - 1); });
    for (unsigned n = 0; n <= nmax; ++n) {
        const QPolynomial u = family_U(n), v = family_V(n);
        const bool dob_u = detail::dobinski_matches(
            u, [&](unsigned k) { return rising(Rational(k + 1, 2), n); }, 0.5, 0.5, n, Rational(1));
        const bool dob_v = detail::dobinski_matches(
            v, [&](unsigned k) { return rising(Rational(k + 3, 2), n); }, 1.5, 0.5, n, Rational(1));
        std::vector<Rational> cu(n + 1), cv(n + 1), cu_binom(n + 1), cv_binom(n + 1);
        for (unsigned j = 0; j <= n; ++j) {
            for (unsigned k = j; k <= n; ++k) {
                const Rational s = abs(stirling1(n, k));
                const Rational b(binom_int(k, j));
                cu[j] += s / ipow(2, k);
                cv[j] += s * ipow(Rational(3, 2), k);
                cu_binom[j] += b * s / ipow(2, k);
                cv_binom[j] += b * s * ipow(Rational(3, 2), k);
            }
            cv[j] /= ipow(3, j);
            cv_binom[j] /= ipow(3, j);
        }
        std::vector<Rational> bu(n + 1), bv(n + 1);
        for (unsigned k = 0; k <= n; ++k) {
            bu[k] = partial_r_bell(1, n, k, std::span(half).first(n), std::span(half_shift).first(n + 1));
            bv[k] = partial_r_bell(1, n, k, std::span(half).first(n), std::span(three_half_shift).first(n + 1));
        }
        const std::string subj = "n=" + std::to_string(n);
        r.add("special-U-dobinski", subj, dob_u);
        r.add("special-U-gf", subj, u == ugf[n]);
        r.add("special-U-rbell", subj, QPolynomial(bu) == u);
        r.add("special-U-bell-basis", subj, combine(cu, bell) == u);
        r.add("special-U-bell-basis-binomial", subj, combine(cu_binom, bell) == u);
        r.add("special-V-dobinski", subj, dob_v);
        r.add("special-V-gf", subj, v == vgf[n]);
        r.add("special-V-rbell", subj, QPolynomial(bv) == v);
        r.add("special-V-bell-basis", subj, combine(cv, bell) == v);
        r.add("special-V-bell-basis-binomial", subj, combine(cv_binom, bell) == v);
    }
}

inline void check_special_laguerre(Report& r, const Rational& lambda, unsigned nmax)
{
    const auto bell = bell_polys(nmax);
    const Rational l1 = lambda + 1;
    const auto ones = sequence_terms(nmax + 1, [](unsigned j) { return rising(1, j); });
    const auto lam_shift = sequence_terms(nmax + 1, [&](unsigned j) { return rising(l1, j - 1); });
    for (unsigned n = 0; n <= nmax; ++n) {
        const QPolynomial l = family_laguerre(lambda, n);
        const Rational inv_fact(Integer(1), factorial(n));
        const bool dob = detail::dobinski_matches(
            l, [&](unsigned k) { return rising(Rational(l1 + k), n); }, std::fabs(l1.get_d()), 1.0, n, inv_fact);
        std::vector<Rational> cb(n + 1), cb_binom(n + 1), br(n + 1);
        for (unsigned j = 0; j <= n; ++j) {
            for (unsigned k = j; k <= n; ++k) {
                cb[j] += abs(stirling1(n, k)) * ipow(l1, k - j);
                cb_binom[j] += Rational(binom_int(k, j)) * abs(stirling1(n, k)) * ipow(l1, k - j);
            }
            cb[j] *= inv_fact;
            cb_binom[j] *= inv_fact;
        }
        for (unsigned k = 0; k <= n; ++k)
            br[k] = inv_fact * partial_r_bell(1, n, k, std::span(ones).first(n), std::span(lam_shift).first(n + 1));
        const std::string subj = "lambda=" + to_string(lambda) + " n=" + std::to_string(n);
        r.add("special-laguerre-dobinski", subj, dob);
        r.add("special-laguerre-rbell", subj, QPolynomial(br) == l);
        r.add("special-laguerre-bell-basis", subj, combine(cb, bell) == l);
        r.add("special-laguerre-bell-basis-binomial", subj, combine(cb_binom, bell) == l);
    }
}

inline void check_special_assoc_lah(Report& r, long m, unsigned nmax)
{
    const auto bell = bell_polys(nmax);
    const auto gen = sequence_terms(nmax, [&](unsigned j) { return rising(m, j); });
    for (unsigned n = 0; n <= nmax; ++n) {
        const QPolynomial l = family_assoc_lah(m, n);
        const bool dob = detail::dobinski_matches(
            l, [&](unsigned k) { return rising(Rational(m * static_cast<long>(k)), n); }, 0.0, static_cast<double>(m), n,
            Rational(1));
        std::vector<Rational> cb(n + 1), pb(n + 1);
        for (unsigned j = 0; j <= n; ++j) cb[j] = ipow(m, j) * abs(stirling1(n, j));
        for (unsigned k = 0; k <= n; ++k) pb[k] = partial_bell(n, k, std::span(gen).first(n));
        const std::string subj = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        r.add("special-assoc-lah-dobinski", subj, dob);
        r.add("special-assoc-lah-partial-bell", subj, QPolynomial(pb) == l);
        r.add("special-assoc-lah-bell-basis", subj, combine(cb, bell) == l);
    }
}

/// n! L_n^(2r-1)(y) has coefficients L_r(n+r, k+r), and the derivative form at y = 1/x agrees.
inline void check_rlah_remark(Report& r, unsigned rr, unsigned nmax)
{
    const Rational lambda(2 * static_cast<long>(rr) - 1);
    for (unsigned n = 0; n <= nmax; ++n) {
        const QPolynomial l = family_laguerre(lambda, n);
        const Rational inv_fact(Integer(1), factorial(n));
        std::vector<Rational> c(n + 1);
        for (unsigned k = 0; k <= n; ++k) c[k] = inv_fact * rlah(rr, n + rr, k + rr);
        const long two_r = 2 * static_cast<long>(rr);
        const auto d = derivative(ExpMonomialSum::monomial(-1, Rational(-two_r)), n)
                           .shifted(Rational(static_cast<long>(n) + two_r))
                           .scaled(sign_power(n) * inv_fact);
        const bool deriv = d == polynomial_in_power(QPolynomial(c), -1, -1);
        r.add("rlah-remark", "r=" + std::to_string(rr) + " n=" + std::to_string(n), QPolynomial(c) == l && deriv);
    }
}

// ---------------------------------------------------------------------------
// Acceptance criteria

struct Criterion {
    int id;
    std::string title;
    std::function<void(Report&)> run;
};

/// Deterministic sample of parameter pairs for the rebase / composition checks.
inline std::vector<std::pair<FamilyParams, FamilyParams>> rebase_pairs()
{
    const auto g = acceptance_grid();
    std::vector<std::pair<FamilyParams, FamilyParams>> out;
    out.emplace_back(FamilyParams(Rational(-1, 2), Rational(-1, 2)), FamilyParams(0, -1));
    out.emplace_back(FamilyParams(1, -1), FamilyParams(0, -2));
    for (std::size_t i = 0; out.size() < 10; ++i) out.emplace_back(g[(7 * i + 3) % g.size()], g[(11 * i + 20) % g.size()]);
    return out;
}

inline std::vector<Criterion> acceptance_criteria()
{
    std::vector<Criterion> c;
    c.push_back({1, "triple-route coefficient equality, n <= 12", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_routes(r, p, 12);
                 }});
    c.push_back({2, "first-values regression P0..P3", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_first_values(r, p);
                 }});
    c.push_back({3, "lowering-step chain, n <= 12", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_lemma1(r, p, 12);
                 }});
    c.push_back({4, "inverse pair, 11x11", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_p5(r, p, 10);
                 }});
    c.push_back({5, "Bell basis, n <= 10", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_p2(r, p, 10);
                     // the U_n display: coefficient of B_j is sum_{k=j..n} |s(n,k)| / 2^k
                     const FamilyParams u = u_params();
                     for (unsigned n = 0; n <= 10; ++n) {
                         const auto c = to_bell_basis(u, n);
                         bool shown = true, with_binomial = true;
                         for (unsigned j = 0; j <= n; ++j) {
                             Rational expect(0), expect_binom(0);
                             for (unsigned k = j; k <= n; ++k) {
                                 expect += abs(stirling1(n, k)) / ipow(2, k);
                                 expect_binom += Rational(binom_int(k, j)) * abs(stirling1(n, k)) / ipow(2, k);
                             }
                             shown = shown && c[j] == expect;
                             with_binomial = with_binomial && c[j] == expect_binom;
                         }
                         r.add("p2-U-display", "n=" + std::to_string(n), shown);
                         r.add("p2-U-display-binomial", "n=" + std::to_string(n), with_binomial);
                     }
                 }});
    c.push_back({6, "r-Bell connection, r <= 3, n <= 8", [](Report& r) {
                     for (const auto& p : acceptance_grid())
                         for (unsigned rr = 0; rr <= 3; ++rr) check_p3(r, p, rr, 8);
                 }});
    c.push_back({7, "addition formula, n + m <= 10", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_c3(r, p, 10);
                 }});
    c.push_back({8, "derivative of the generating function, m <= 5, order 10", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_t2(r, p, 5, 10);
                 }});
    c.push_back({9, "derivative and Bell-operator representations", [](Report& r) {
                     for (const auto& p : acceptance_grid()) {
                         check_t4(r, p, 6);
                         for (const Rational& lam : {Rational(0), Rational(1), Rational(p.alpha() / p.beta())})
                             check_bell_operator(r, p, lam, 5);
                     }
                 }});
    c.push_back({10, "rebase and composition", [](Report& r) {
                     std::optional<SignPlacement> seen;
                     bool consistent = true;
                     auto track = [&](std::optional<SignPlacement> s) {
                         if (!s) return;
                         if (seen && *seen != *s) consistent = false;
                         seen = s;
                     };
                     for (const auto& [from, to] : rebase_pairs()) {
                         check_rebase(r, from, to, 6);
                         track(check_composition(r, from, to, 6));
                     }
                     for (const auto& p : acceptance_grid()) track(check_p4_lah(r, p, 6));
                     r.add("sign-convention", {}, consistent && seen.has_value(),
                           "resolved=" + (seen ? to_string(*seen) : std::string("none")) +
                               " (sign goes with the summed index)");
                 }});
    c.push_back({11, "real zeros in the asserted regions", [](Report& r) {
                     for (const auto& p : acceptance_grid()) check_t3(r, p, 20);
                 }});
    c.push_back({12, "Newton log-concavity for alpha <= 0, beta < 0", [](Report& r) {
                     for (const auto& p : acceptance_grid())
                         if (p.alpha() <= 0 && p.beta() < 0) check_c1(r, p, 12);
                 }});
    c.push_back({13, "specializations U, V, Laguerre, associated Lah, r-Lah", [](Report& r) {
                     check_special_uv(r, 8);
                     for (const Rational& lam : {Rational(-2), Rational(-1, 2), Rational(0), Rational(1), Rational(3)})
                         check_special_laguerre(r, lam, 8);
                     for (long m : {1L, 2L, 3L}) check_special_assoc_lah(r, m, 8);
                     check_rlah_remark(r, 1, 6);
                 }});
    return c;
}

} // namespace genbell::catalog
