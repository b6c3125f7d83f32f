#include <gtest/gtest.h>

#include "thermnet/polynomial.hpp"

namespace thermnet {
namespace {

TEST(Polynomial, TrimsNegligibleLeadingCoefficients) {
  const Polynomial p({1.0, 2.0, 1e-12});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(Polynomial({0.0, 0.0}).degree(), -1);
  EXPECT_TRUE(Polynomial().is_zero());
  // Trimming is relative to the largest coefficient, not absolute.
  EXPECT_EQ(Polynomial({1e-15, 1e-14}).degree(), 1);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a({1.0, 1.0});   // 1 + s
  const Polynomial b({-1.0, 1.0});  // -1 + s
  EXPECT_EQ(a * b, Polynomial({-1.0, 0.0, 1.0}));
  EXPECT_EQ(a + b, Polynomial({0.0, 2.0}));
  EXPECT_EQ(a - a, Polynomial());
  EXPECT_EQ(a.pow(3), Polynomial({1.0, 3.0, 3.0, 1.0}));
  EXPECT_EQ(a.pow(0), Polynomial::constant(1.0));
  EXPECT_EQ(-a, Polynomial({-1.0, -1.0}));
  EXPECT_EQ(2.0 * a, Polynomial({2.0, 2.0}));
  EXPECT_TRUE((a * Polynomial()).is_zero());
}

TEST(Polynomial, Evaluation) {
  const Polynomial p({2.0, -3.0, 1.0});  // (s - 1)(s - 2)
  EXPECT_DOUBLE_EQ(p.evaluate(1.0), 0.0);
  EXPECT_DOUBLE_EQ(p.evaluate(3.0), 2.0);
  const std::complex<double> v = p.evaluate(std::complex<double>(0.0, 1.0));
  EXPECT_DOUBLE_EQ(v.real(), 1.0);
  EXPECT_DOUBLE_EQ(v.imag(), -3.0);
}

TEST(Polynomial, Accessors) {
  const Polynomial p({4.0, 0.0, -8.0});
  EXPECT_EQ(p[0], 4.0);
  EXPECT_EQ(p[7], 0.0);
  EXPECT_EQ(p.leading(), -8.0);
  EXPECT_EQ(p.max_abs_coefficient(), 8.0);
  EXPECT_EQ(Polynomial::linear_root(-0.5), Polynomial({0.5, 1.0}));  // s + 0.5
}

TEST(Polynomial, Text) {
  EXPECT_EQ(Polynomial({1.0, 7.286e5, 1.448e9}).to_string(), "1.448e+09*s^2 + 7.286e+05*s + 1");
  EXPECT_EQ(Polynomial({-2.0, 0.0, -1.0}).to_string(), "-1*s^2 - 2");
  EXPECT_EQ(Polynomial().to_string(), "0");
}

}  // namespace
}  // namespace thermnet
