#include "genbell/real_zeros.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace genbell;

namespace {

QPolynomial from_roots(const std::vector<Rational>& roots)
{
    QPolynomial p{1};
    for (const auto& r : roots) p = p * QPolynomial({Rational(-r), 1});
    return p;
}

} // namespace

TEST(Sturm, CountsRealRoots)
{
    EXPECT_EQ(count_real_roots(QPolynomial({1, 0, 1})), 0u);
    EXPECT_EQ(count_real_roots(QPolynomial({-1, 0, 1})), 2u);
    EXPECT_EQ(count_real_roots(poly(FamilyParams(0, -1), 2)), 2u);
    EXPECT_EQ(poly(FamilyParams(0, -1), 2), QPolynomial({0, 2, 1}));
}

TEST(Sturm, IntervalCounts)
{
    const SturmChain chain(from_roots({-3, Rational(1, 2), 2}));
    EXPECT_EQ(chain.count_all(), 3u);
    EXPECT_EQ(chain.count_in(0, 2), 2u);  // (0, 2]
    EXPECT_EQ(chain.count_in(-3, 0), 0u); // (-3, 0]
}

TEST(Sturm, AllRootsReal)
{
    EXPECT_TRUE(all_roots_real(from_roots({1, 1, -2})));
    EXPECT_FALSE(all_roots_real(QPolynomial({1, 0, 1})));
    EXPECT_FALSE(is_squarefree(from_roots({1, 1, -2})));
    EXPECT_EQ(squarefree_part(from_roots({1, 1, -2})), from_roots({1, -2}));
    const FamilyParams u(Rational(-1, 2), Rational(-1, 2));
    const auto ps = polys(u, 20);
    for (unsigned n = 1; n <= 20; ++n) EXPECT_TRUE(all_roots_real(ps[n])) << n;
}

TEST(Sturm, RandomFactoredPolynomials)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6), deg(1, 8), kind(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> roots;
        QPolynomial p{1};
        const long d = deg(rng);
        unsigned complex_pairs = 0;
        while (static_cast<long>(p.degree()) < d) {
            if (kind(rng) == 0 && p.degree() + 2 <= d) {
                // x^2 + c with c > 0 has no real roots
                p = p * QPolynomial({Rational(std::abs(num(rng)) + 1, den(rng)), 0, 1});
                ++complex_pairs;
            } else {
                Rational r(num(rng), den(rng));
                r.canonicalize();
                roots.push_back(r);
                p = p * QPolynomial({Rational(-r), 1});
            }
        }
        std::sort(roots.begin(), roots.end());
        const auto distinct = static_cast<unsigned>(std::unique(roots.begin(), roots.end()) - roots.begin());
        roots.resize(distinct);
        EXPECT_EQ(count_real_roots(p), distinct);
        EXPECT_EQ(all_roots_real(p), complex_pairs == 0);

        const auto sq = squarefree_part(p);
        const auto iv = isolate_roots(sq, Rational(1, 128));
        ASSERT_EQ(iv.size(), distinct);
        for (std::size_t i = 0; i < iv.size(); ++i) {
            EXPECT_LE(iv[i].lo, roots[i]);
            EXPECT_LE(roots[i], iv[i].hi);
            EXPECT_LE(iv[i].hi - iv[i].lo, Rational(1, 128));
            if (i > 0) {
                EXPECT_LT(iv[i - 1].hi, iv[i].lo);
            }
        }
    }
}

TEST(Isolation, Examples)
{
    const auto iv = isolate_roots(QPolynomial({-2, 0, 1}));
    ASSERT_EQ(iv.size(), 2u);
    const QPolynomial p2{-2, 0, 1};
    for (const auto& i : iv) {
        EXPECT_LE(i.hi - i.lo, Rational(1, 64));
        EXPECT_LE(detail::sign_at(p2, i.lo) * detail::sign_at(p2, i.hi), 0);
    }
    EXPECT_LT(iv[0].hi, 0);
    EXPECT_GT(iv[1].lo, 0);

    const FamilyParams p(Rational(2, 3), Rational(-5, 4));
    const auto one = isolate_roots(poly(p, 1));
    ASSERT_EQ(one.size(), 1u);
    const Rational root = -p.alpha() / p.beta();
    EXPECT_LE(one[0].lo, root);
    EXPECT_LE(root, one[0].hi);

    const auto u3 = isolate_roots(poly(FamilyParams(Rational(-1, 2), Rational(-1, 2)), 3));
    ASSERT_EQ(u3.size(), 3u);
    for (const auto& i : u3) EXPECT_LE(i.hi, 0);

    EXPECT_THROW(isolate_roots(from_roots({1, 1})), std::invalid_argument);
}

TEST(Interlacing, ConsecutiveFamilyMembers)
{
    const FamilyParams p(-1, -1);
    const auto ps = polys(p, 12);
    for (unsigned n = 1; n < 12; ++n) EXPECT_TRUE(interlaces(ps[n + 1], ps[n])) << n;
    EXPECT_FALSE(interlaces(from_roots({0, 1, 2}), from_roots({Rational(1, 2), Rational(3, 4)})));
}

TEST(Regions, Classification)
{
    EXPECT_EQ(classify(FamilyParams(-1, -1)), Region::A);
    EXPECT_EQ(classify(FamilyParams(Rational(1, 2), -1)), Region::A);
    EXPECT_EQ(classify(FamilyParams(2, -1)), Region::Neither);
    EXPECT_EQ(classify(FamilyParams(Rational(5, 2), -1)), Region::Neither);
    EXPECT_EQ(classify(FamilyParams(Rational(3, 2), 2)), Region::ATilde);
    EXPECT_EQ(classify(FamilyParams(Rational(1, 2), 2)), Region::Neither);
    EXPECT_EQ(to_string(Region::ATilde), "A-tilde");
    EXPECT_EQ(asserted_degree_limit(FamilyParams(Rational(3, 2), 2), 20), 2u);
}

TEST(Regions, ReportForBoundaryCase)
{
    const auto r = check_theorem3(FamilyParams(-1, -1), 10);
    EXPECT_EQ(r.region, Region::A);
    EXPECT_TRUE(r.holds());
    ASSERT_EQ(r.results.size(), 10u);
    for (const auto& d : r.results) {
        EXPECT_TRUE(d.asserted);
        EXPECT_TRUE(d.all_real);
    }
}

TEST(LogConcavity, NewtonInequalities)
{
    const auto r2 = gstirling_table(0, -1, 2).row(2);
    EXPECT_EQ(std::vector<Rational>(r2.begin(), r2.end()), std::vector<Rational>({0, 2, 1}));
    for (unsigned n = 2; n <= 12; ++n) {
        EXPECT_TRUE(check_newton_logconcave(FamilyParams(0, -1), n));
        EXPECT_TRUE(check_newton_logconcave(FamilyParams(-1, -1), n));
        EXPECT_TRUE(check_newton_logconcave(FamilyParams(Rational(-1, 2), Rational(-3, 2)), n));
    }
    EXPECT_THROW(check_newton_logconcave(FamilyParams(1, -1), 3), std::invalid_argument);
    EXPECT_THROW(check_newton_logconcave(FamilyParams(-1, -1), 1), std::invalid_argument);
}
