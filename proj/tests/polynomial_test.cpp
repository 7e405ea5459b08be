#include "orbitope/polynomial.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace orbitope {
namespace {

Polynomial random_polynomial(std::mt19937_64& rng) {
  std::vector<Integer> c(rng() % 7);
  for (auto& x : c) x = testing::random_integer(rng, 100);
  return Polynomial(std::move(c));
}

TEST(Polynomial, ZeroIsEmpty) {
  EXPECT_TRUE(Polynomial().is_zero());
  EXPECT_EQ(Polynomial({0, 0, 0}), Polynomial());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(Polynomial({1, 2, 0}).degree(), 1);
  EXPECT_EQ((Polynomial{1, 1} - Polynomial{1, 1}).size(), 0u);
}

TEST(Polynomial, ComposeLinearExamples) {
  // hexagon: 6 + 6t + t^2 -> 1 + 4t + t^2
  EXPECT_EQ(poly_compose_linear(Polynomial{6, 6, 1}, -1), (Polynomial{1, 4, 1}));
  EXPECT_EQ(poly_compose_linear(Polynomial{0, 0, 1}, 1), (Polynomial{1, 2, 1}));
  const Polynomial p{3, -7, 0, 11, 5};
  EXPECT_EQ(poly_compose_linear(p, 0), p);
}

TEST(Polynomial, SubstituteSquareAndEvaluate) {
  const Polynomial p{1, 4, 1};
  EXPECT_EQ(p.substitute_square(), (Polynomial{1, 0, 4, 0, 1}));
  EXPECT_EQ(p.evaluate(1), 6);
  EXPECT_EQ(p.evaluate(-2), 1 - 8 + 4);
  EXPECT_TRUE(p.is_palindromic());
  EXPECT_FALSE((Polynomial{1, 2}).is_palindromic());
}

TEST(Polynomial, ToString) {
  EXPECT_EQ((Polynomial{1, 4, 1}).to_string(), "1 + 4t + t^2");
  EXPECT_EQ((Polynomial{0, -1, 0, 2}).to_string(), "-t + 2t^3");
  EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(Polynomial, ComposeRoundTripProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_polynomial(rng);
    const Integer s = testing::random_integer(rng, 20);
    EXPECT_EQ(poly_compose_linear(poly_compose_linear(p, -1), 1), p);
    EXPECT_EQ(poly_compose_linear(poly_compose_linear(p, s), -s), p);
    // q(x) = p(x + s) at a sample point
    const Integer x = testing::random_integer(rng, 16);
    EXPECT_EQ(poly_compose_linear(p, s).evaluate(x), p.evaluate(x + s));
  }
}

TEST(Polynomial, RingAxiomsWithWideCoefficients) {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_polynomial(rng);
    const Polynomial b = random_polynomial(rng);
    const Polynomial c = random_polynomial(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Polynomial());
    EXPECT_EQ(-(-a), a);
    const Integer x = testing::random_integer(rng, 40);
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
  }
}

TEST(Polynomial, PowMatchesRepeatedProduct) {
  const Polynomial base{-1, 1};
  Polynomial acc = Polynomial::constant(1);
  for (unsigned e = 0; e < 12; ++e) {
    EXPECT_EQ(base.pow(e), acc);
    acc *= base;
  }
}

}  // namespace
}  // namespace orbitope
