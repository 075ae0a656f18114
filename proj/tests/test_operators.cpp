#include "genbell/operators.hpp"

#include <gtest/gtest.h>

using namespace genbell;

namespace {

const std::vector<Rational> sample_values{-2, Rational(-1, 2), 0, Rational(1, 3), 2, 3};

} // namespace

TEST(ExpMonomial, Derivative)
{
    EXPECT_TRUE(derivative(ExpMonomialSum(Rational(2))).empty());
    EXPECT_EQ(derivative(ExpMonomialSum::monomial(1, 0)), ExpMonomialSum::monomial(1, 0));

    auto expect = ExpMonomialSum::monomial(Rational(-1, 2), Rational(-1, 2), Rational(1, 2));
    expect.add(-1, Rational(-1, 2));
    EXPECT_EQ(derivative(ExpMonomialSum::monomial(Rational(-1, 2), Rational(1, 2))), expect);
    EXPECT_THROW(ExpMonomialSum(0), std::invalid_argument);
}

TEST(ExpMonomial, EulerShift)
{
    const Rational b(3, 2);
    EXPECT_EQ(euler_shift(ExpMonomialSum::monomial(b, 0), 0), ExpMonomialSum::monomial(b, b, b));

    const Rational g(-2, 5);
    auto expect = ExpMonomialSum::monomial(b, g, g);
    expect.add(Rational(g + b), b);
    EXPECT_EQ(euler_shift(ExpMonomialSum::monomial(b, g), 0), expect);

    // (x d/dx - 1/2)^2 on x e^{x^2}, by hand: x e^{x^2} -> (1/2)x + 2x^3 -> (1/4)x + 6x^3 + 4x^5
    auto twice = euler_shift(euler_shift(ExpMonomialSum::monomial(2, 1), Rational(-1, 2)), Rational(-1, 2));
    auto hand = ExpMonomialSum::monomial(2, 1, Rational(1, 4));
    hand.add(3, 6);
    hand.add(5, 4);
    EXPECT_EQ(twice, hand);
}

TEST(ExpMonomial, EulerOperatorExpansion)
{
    for (const Rational& b : {Rational(1), Rational(-1, 2), Rational(2)})
        for (const Rational& g : {Rational(0), Rational(1, 3), Rational(-2)})
            for (unsigned d = 0; d <= 5; ++d) EXPECT_TRUE(verify_euler_operator_expansion(ExpMonomialSum::monomial(b, g), d));
}

TEST(Operators, FirstDerivativeRepresentation)
{
    for (const auto& a : sample_values)
        for (const auto& b : sample_values) {
            if (b == 0) {
                EXPECT_THROW(verify_T4_first(a, b, 1), std::invalid_argument);
                continue;
            }
            for (unsigned n = 0; n <= 6; ++n) EXPECT_TRUE(verify_T4_first(a, b, n));
        }
    for (unsigned n = 0; n <= 4; ++n) EXPECT_TRUE(verify_T4_first_dobinski(Rational(-1, 2), Rational(-1, 2), n, 8));
}

TEST(Operators, SecondDerivativeRepresentation)
{
    for (unsigned n = 0; n <= 6; ++n) {
        EXPECT_TRUE(verify_T4_second(Rational(-3, 2), Rational(-1, 2), n));
        EXPECT_TRUE(verify_T4_second(0, -1, n));
        EXPECT_TRUE(verify_T4_second(Rational(1, 3), 2, n));
    }
}

TEST(Operators, BellOperatorClassicalCase)
{
    for (unsigned n = 0; n <= 6; ++n) EXPECT_TRUE(verify_bell_operator(0, 1, 0, n));
}

TEST(Operators, BellOperatorUnitBetaZeroShift)
{
    for (const auto& a : sample_values)
        for (unsigned n = 0; n <= 5; ++n) EXPECT_TRUE(verify_bell_operator(a, 1, 0, n));
}

TEST(Operators, BellOperatorCorrectedForm)
{
    for (const auto& a : sample_values)
        for (const auto& b : sample_values) {
            if (b == 0) continue;
            for (const Rational& lambda : {Rational(0), Rational(1), Rational(-5, 3), Rational(a / b)})
                for (unsigned n = 0; n <= 5; ++n) EXPECT_TRUE(verify_bell_operator_corrected(a, b, lambda, n));
        }
}

TEST(Operators, BellOperatorAsStatedFailsOffTheSpecialCase)
{
    EXPECT_TRUE(verify_bell_operator(2, -3, 0, 0));
    EXPECT_FALSE(verify_bell_operator(2, -3, 0, 1));
    EXPECT_FALSE(verify_bell_operator(0, Rational(1, 2), 0, 2));
    // beta = 1 with a nonzero shift: B_2(1 + x) = 2 + 3x + x^2 but the operator gives 1 + 3x + x^2
    EXPECT_TRUE(verify_bell_operator(0, 1, 1, 1));
    EXPECT_FALSE(verify_bell_operator(0, 1, 1, 2));
}
