#include "genbell/exact.hpp"
#include "genbell/qpolynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace genbell;

TEST(Exact, RisingFactorial)
{
    EXPECT_EQ(rising(Rational(7, 3), 0), 1);
    EXPECT_EQ(rising(1, 5), 120);
    EXPECT_EQ(rising(-2, 2), 2);
}

TEST(Exact, FallingFactorial)
{
    EXPECT_EQ(falling(Rational(7, 3), 0), 1);
    EXPECT_EQ(falling(3, 3), 6);
    EXPECT_EQ(falling(Rational(1, 2), 2), Rational(-1, 4));
}

TEST(Exact, Binomial)
{
    EXPECT_EQ(binom(Rational(-5, 7), 0), 1);
    EXPECT_EQ(binom(5, 2), 10);
    EXPECT_EQ(binom(Rational(1, 2), 2), Rational(-1, 8));
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binom(n, k), Rational(binom_int(n, k)));
}

TEST(Exact, RisingFallingReflection)
{
    // <a>_n = (-1)^n (-a)_n
    const std::vector<Rational> samples{-3, Rational(-5, 2), 0, Rational(1, 3), 4};
    for (const auto& a : samples)
        for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(rising(a, n), sign_power(n) * falling(Rational(-a), n));
}

TEST(Exact, ParsePrintRoundTrip)
{
    std::mt19937 rng(20241);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 5000);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        const std::string s = to_string(r);
        EXPECT_EQ(parse_rational(s), r);
        EXPECT_EQ(to_string(parse_rational(s)), s);
    }
}

TEST(Exact, WireFormat)
{
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-4/2")), "-2");
    EXPECT_EQ(to_string(Rational(-1, 3)), "-1/3");
    EXPECT_EQ(parse_rational(" +6/4 "), Rational(3, 2));
    EXPECT_EQ(parse_rational("-0"), 0);
}

TEST(Exact, ParseRejects)
{
    for (const char* bad : {"", "1.5", "1/0", "1/-2", "abc", "1//2", "1e3", "/3"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
}

TEST(Exact, Ceil)
{
    EXPECT_EQ(ceil(Rational(1, 3)), 1);
    EXPECT_EQ(ceil(Rational(-1, 3)), 0);
    EXPECT_EQ(ceil(Rational(2)), 2);
}

TEST(QPolynomialTest, TrimsAndDegree)
{
    EXPECT_EQ(QPolynomial({0, 0}).degree(), -1);
    EXPECT_TRUE(QPolynomial({0, 0}).is_zero());
    EXPECT_EQ(QPolynomial({1, 2, 0}).degree(), 1);
}

TEST(QPolynomialTest, Arithmetic)
{
    const QPolynomial a{1, 1}, b{-1, 1};
    EXPECT_EQ(a * b, QPolynomial({-1, 0, 1}));
    EXPECT_EQ(a + b, QPolynomial({0, 2}));
    EXPECT_EQ(a - a, QPolynomial());
    EXPECT_EQ((a * b).derivative(), QPolynomial({0, 2}));
    EXPECT_EQ(a.scale_argument(3), QPolynomial({1, 3}));
    EXPECT_EQ(a.shift_up(2), QPolynomial({0, 0, 1, 1}));
    EXPECT_EQ((a * a)(Rational(1, 2)), Rational(9, 4));
}

TEST(QPolynomialTest, DivisionAndGcd)
{
    const QPolynomial f = QPolynomial({-1, 1}) * QPolynomial({2, 1}) * QPolynomial({2, 1});
    const QPolynomial g = QPolynomial({2, 1}) * QPolynomial({5, 0, 1});
    EXPECT_EQ(gcd(f, g), QPolynomial({2, 1}));
    auto [q, r] = divmod(f, QPolynomial({2, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q * QPolynomial({2, 1}), f);
    EXPECT_THROW(exact_quotient(f, QPolynomial({3, 1})), std::domain_error);
    EXPECT_THROW(divmod(f, QPolynomial()), std::domain_error);
    EXPECT_EQ(primitive_part(QPolynomial({Rational(1, 2), Rational(3, 4)})), QPolynomial({2, 3}));
}

TEST(QPolynomialTest, TextForms)
{
    const QPolynomial p{1, 2, Rational(1, 2)};
    EXPECT_EQ(coefficient_list(p), "1, 2, 1/2");
    EXPECT_EQ(pretty(p), "(x^2 + 4x + 2)/2");
    EXPECT_EQ(coefficient_list(QPolynomial()), "0");
    EXPECT_EQ(coefficient_list(QPolynomial::monomial(1, 4)), "0, 0, 0, 0, 1");
}
