#include "hered/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using hered::Rational;

TEST(Rational, NormalisesSignAndGcd) {
    Rational r(6, -4);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 2);
    EXPECT_EQ(Rational(0, 5).str(), "0/1");
    EXPECT_EQ(Rational(1, 2).str(), "1/2");
    EXPECT_EQ(Rational(3).str(), "3/1");
    EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Arithmetic) {
    EXPECT_EQ(Rational(1) - Rational(1, 2), Rational(1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
}

TEST(Rational, OrderingMatchesCrossMultiplication) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 2000; ++t) {
        std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000, b = 1 + static_cast<std::int64_t>(rng() % 1000);
        std::int64_t c = static_cast<std::int64_t>(rng() % 2001) - 1000, d = 1 + static_cast<std::int64_t>(rng() % 1000);
        EXPECT_EQ(Rational(a, b) < Rational(c, d), a * d < c * b);
        EXPECT_EQ(Rational(a, b) == Rational(c, d), a * d == c * b);
    }
    EXPECT_LT(Rational(3, 5), Rational(2, 3));
    EXPECT_GT(Rational(2, 3), Rational(1, 2));
}
