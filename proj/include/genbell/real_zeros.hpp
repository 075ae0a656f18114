#pragma once
// Exact real-root counting and isolation with Sturm chains over Q, plus the
// real-rootedness regions and Newton-inequality check for P_n^(alpha,beta).

#include "genbell/exact.hpp"
#include "genbell/family.hpp"
#include "genbell/qpolynomial.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace genbell {

/// p, p', then negated remainders until the remainder vanishes. Every member is
/// stored as its primitive part; positive scaling leaves sign variations intact.
class SturmChain {
public:
    explicit SturmChain(const QPolynomial& p)
    {
        if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
        polys_.push_back(primitive_part(p));
        QPolynomial d = primitive_part(p.derivative());
        if (d.is_zero()) return;
        polys_.push_back(std::move(d));
        while (true) {
            QPolynomial r = divmod(polys_[polys_.size() - 2], polys_.back()).second;
            if (r.is_zero()) break;
            polys_.push_back(primitive_part(-r));
        }
    }

    const std::vector<QPolynomial>& polys() const { return polys_; }

    /// Sign variations at x, zeros skipped.
    unsigned variations(const Rational& x) const
    {
        std::vector<int> signs;
        signs.reserve(polys_.size());
        for (const auto& p : polys_) signs.push_back(sgn(p(x)));
        return count(signs);
    }

    /// Sign variations at +infinity (positive) or -infinity (negative).
    unsigned variations_at_infinity(bool positive) const
    {
        std::vector<int> signs;
        for (const auto& p : polys_) {
            int s = sgn(p.leading());
            if (!positive && p.degree() % 2 == 1) s = -s;
            signs.push_back(s);
        }
        return count(signs);
    }

    /// Distinct real roots of the chain's head.
    unsigned count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

    /// Distinct roots in (a, b]; exact even when a or b is a root.
    unsigned count_in(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

private:
    static int sgn(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

    static unsigned count(const std::vector<int>& signs)
    {
        unsigned v = 0;
        int last = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (last != 0 && s != last) ++v;
            last = s;
        }
        return v;
    }

    std::vector<QPolynomial> polys_;
};

/// Number of distinct real roots.
inline unsigned count_real_roots(const QPolynomial& p)
{
    if (p.is_zero()) throw std::invalid_argument("count_real_roots of the zero polynomial");
    return SturmChain(p).count_all();
}

/// p / gcd(p, p'): same roots, all simple.
inline QPolynomial squarefree_part(const QPolynomial& p)
{
    if (p.is_constant()) return p;
    return exact_quotient(p, gcd(p, p.derivative()));
}

inline bool is_squarefree(const QPolynomial& p)
{
    return !p.is_zero() && gcd(p, p.derivative()).is_constant();
}

/// True iff every complex root of p is real (counted with multiplicity).
inline bool all_roots_real(const QPolynomial& p)
{
    if (p.degree() < 1) throw std::invalid_argument("all_roots_real needs degree >= 1");
    const QPolynomial g = gcd(p, p.derivative());
    const QPolynomial sqf = exact_quotient(p, g);
    if (count_real_roots(sqf) != static_cast<unsigned>(sqf.degree())) return false;
    return g.is_constant() || all_roots_real(g);
}

struct RootInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

namespace detail {

/// Power of two strictly greater than every |root| of p (Cauchy bound).
inline Rational root_bound(const QPolynomial& p)
{
    Rational m(0);
    for (const auto& c : p.coefficients()) m = std::max(m, Rational(abs(c / p.leading())));
    Rational b(1);
    while (b <= m + 1) b *= 2;
    return b;
}

/// A split point inside (lo, hi) where p does not vanish.
inline Rational split_point(const QPolynomial& p, const Rational& lo, const Rational& hi)
{
    for (unsigned den = 2;; ++den)
        for (unsigned num = 1; num < den; ++num) {
            Rational f(num, den);
            f.canonicalize();
            Rational m = lo + (hi - lo) * f;
            if (p(m) != 0) return m;
        }
}

inline int sign_at(const QPolynomial& p, const Rational& x)
{
    Rational v = p(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Shrinks (lo, hi], known to hold exactly one simple root with p(lo), p(hi) != 0, by bisection.
inline RootInterval refine(const QPolynomial& p, Rational lo, Rational hi, const Rational& max_width)
{
    int slo = sign_at(p, lo);
    while (hi - lo > max_width) {
        Rational mid = (lo + hi) / 2;
        int sm = sign_at(p, mid);
        if (sm == 0) return {mid, mid};
        if (sm == slo) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

} // namespace detail

/// One interval per distinct real root, each of width <= max_width and holding exactly one root;
/// sorted ascending. p must be square-free.
inline std::vector<RootInterval> isolate_roots(const QPolynomial& p, const Rational& max_width = Rational(1, 64))
{
    if (p.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
    if (max_width <= 0) throw std::invalid_argument("isolation width must be positive");
    if (!is_squarefree(p)) throw std::invalid_argument("isolate_roots needs a square-free polynomial");
    std::vector<RootInterval> out;
    if (p.is_constant()) return out;
    const SturmChain chain(p);
    const Rational bound = detail::root_bound(p);
    std::deque<RootInterval> work{{-bound, bound}};
    while (!work.empty()) {
        RootInterval iv = work.front();
        work.pop_front();
        const unsigned c = chain.count_in(iv.lo, iv.hi);
        if (c == 0) continue;
        if (c == 1) {
            out.push_back(detail::refine(p, iv.lo, iv.hi, max_width));
            continue;
        }
        Rational mid = detail::split_point(p, iv.lo, iv.hi);
        work.push_back({iv.lo, mid});
        work.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

/// Strict interlacing: p is square-free and real-rooted of degree d, q has d-1 simple real roots,
/// exactly one strictly between each pair of consecutive roots of p.
inline bool interlaces(const QPolynomial& p, const QPolynomial& q)
{
    if (p.degree() < 1 || !is_squarefree(p) || q.degree() != p.degree() - 1) return false;
    if (q.is_constant()) return true;
    if (!is_squarefree(q)) return false;
    const SturmChain qc(q);
    if (qc.count_all() != static_cast<unsigned>(q.degree())) return false;
    const SturmChain pc(p);
    if (pc.count_all() != static_cast<unsigned>(p.degree())) return false;

    auto ivs = isolate_roots(p, Rational(1));
    for (auto& iv : ivs) {
        // shrink until no root of q sits in [lo, hi]
        while (!(q(iv.lo) != 0 && qc.count_in(iv.lo, iv.hi) == 0)) {
            if (iv.lo == iv.hi) return false; // common root
            iv = detail::refine(p, iv.lo, iv.hi, Rational(iv.width() / 2));
        }
    }
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
        if (qc.count_in(ivs[i].hi, ivs[i + 1].lo) != 1) return false;
    return true;
}

enum class Region { A, ATilde, Neither };

inline std::string to_string(Region r)
{
    switch (r) {
    case Region::A: return "A";
    case Region::ATilde: return "A-tilde";
    case Region::Neither: return "neither";
    }
    return "?";
}

/// A: (beta-1)^2 + 4 alpha beta >= 0, beta < 0, alpha <= 2.  A-tilde: beta > 0, alpha >= 1.
inline Region classify(const FamilyParams& params)
{
    const Rational& a = params.alpha();
    const Rational& b = params.beta();
    const Rational disc = (b - 1) * (b - 1) + 4 * a * b;
    if (disc >= 0 && b < 0 && a <= 2) return Region::A;
    if (b > 0 && a >= 1) return Region::ATilde;
    return Region::Neither;
}

struct DegreeResult {
    unsigned n = 0;
    bool all_real = false;
    bool asserted = false; ///< the real-rootedness theorem covers this degree
    std::vector<RootInterval> roots; ///< isolating intervals of the distinct real roots
};

struct RegionReport {
    FamilyParams params;
    unsigned n_checked = 0;
    Region region = Region::Neither;
    std::vector<DegreeResult> results;

    /// No asserted degree failed.
    bool holds() const
    {
        return std::all_of(results.begin(), results.end(), [](const auto& r) { return !r.asserted || r.all_real; });
    }
};

/// Highest degree the theorem asserts for these parameters (0 when none).
inline unsigned asserted_degree_limit(const FamilyParams& params, unsigned nmax)
{
    switch (classify(params)) {
    case Region::A: return nmax;
    case Region::ATilde: {
        Integer c = ceil(params.alpha());
        return c < nmax ? static_cast<unsigned>(c.get_ui()) : nmax;
    }
    case Region::Neither: return 0;
    }
    return 0;
}

/// Real-rootedness of P_1..P_nmax, with root isolation when isolate_width > 0.
inline RegionReport check_theorem3(const FamilyParams& params, unsigned nmax, const Rational& isolate_width = Rational(0))
{
    RegionReport rep{params, nmax, classify(params), {}};
    const unsigned limit = asserted_degree_limit(params, nmax);
    const auto ps = polys(params, nmax);
    for (unsigned n = 1; n <= nmax; ++n) {
        DegreeResult r;
        r.n = n;
        r.asserted = n <= limit;
        r.all_real = all_roots_real(ps[n]);
        if (isolate_width > 0) r.roots = isolate_roots(squarefree_part(ps[n]), isolate_width);
        rep.results.push_back(std::move(r));
    }
    return rep;
}

/// S(n,k)^2 >= (1 + 1/k)(1 + 1/(n-k)) S(n,k+1) S(n,k-1) for 1 <= k <= n-1.
/// Only defined for alpha <= 0, beta < 0 and n >= 2.
inline bool check_newton_logconcave(const FamilyParams& params, unsigned n)
{
    if (!(params.alpha() <= 0 && params.beta() < 0))
        throw std::invalid_argument("log-concavity is only claimed for alpha <= 0 and beta < 0");
    if (n < 2) throw std::invalid_argument("log-concavity check needs n >= 2");
    const auto t = gstirling_table(params.alpha(), params.beta(), n);
    for (unsigned k = 1; k + 1 <= n; ++k) {
        Rational lhs = t(n, k) * t(n, k);
        Rational rhs = (1 + Rational(1, k)) * (1 + Rational(1, n - k)) * t(n, k + 1) * t(n, k - 1);
        if (lhs < rhs) return false;
    }
    return true;
}

} // namespace genbell
