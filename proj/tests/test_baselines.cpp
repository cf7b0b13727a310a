#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dyadic/baselines.hpp"
#include "dyadic/errors.hpp"

using namespace dyadic::baselines;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

double taylor_mxm(int terms) {
  double mxm = 0.0;
  for (int i = 0; i <= 10000; ++i) {
    const double x = kHalfPi * i / 10000.0;
    mxm = std::max(mxm, std::fabs(taylor_cos(x, terms) - std::cos(x)));
  }
  return mxm;
}

double cordic_mxm(int iters) {
  double mxm = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = kHalfPi * i / 2000.0;
    const auto [c, s] = cordic_rotate(x, iters);
    mxm = std::max({mxm, std::fabs(c - std::cos(x)), std::fabs(s - std::sin(x))});
  }
  return mxm;
}

}  // namespace

TEST(Taylor, Examples) {
  EXPECT_EQ(taylor_cos(0.0, 1), 1.0);
  EXPECT_NEAR(taylor_cos(std::numbers::pi / 4, 10), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(taylor_cos(kHalfPi, 2), 1.0 - std::numbers::pi * std::numbers::pi / 8, 1e-15);
  EXPECT_THROW(taylor_cos(0.0, 0), dyadic::DomainError);
  EXPECT_THROW(taylor_cos(0.0, 21), dyadic::DomainError);
}

TEST(Taylor, ErrorShrinksWithTerms) {
  double prev = taylor_mxm(2);
  for (int terms = 3; terms <= 10; ++terms) {
    const double e = taylor_mxm(terms);
    EXPECT_LT(e, prev) << terms;
    prev = e;
  }
  EXPECT_LE(prev, 1e-14);
}

TEST(Cordic, Table) {
  const CordicTable t(40);
  EXPECT_EQ(t.size(), 40);
  for (int i = 1; i < t.size(); ++i) EXPECT_LT(t.angles()[i], t.angles()[i - 1]);
  EXPECT_GT(t.gain(20), 0.6072);
  EXPECT_LT(t.gain(20), 0.6073);
  EXPECT_EQ(t.bytes(), 80 * sizeof(double));
  EXPECT_THROW(CordicTable(0), dyadic::DomainError);
  EXPECT_THROW(CordicTable(61), dyadic::DomainError);
  EXPECT_THROW(t.gain(41), dyadic::DomainError);
}

TEST(Cordic, RotateExamples) {
  auto [c0, s0] = cordic_rotate(0.0, 40);
  EXPECT_NEAR(c0, 1.0, 1e-12);
  EXPECT_NEAR(s0, 0.0, 1e-12);
  auto [c1, s1] = cordic_rotate(std::numbers::pi / 4, 52);
  EXPECT_NEAR(c1, std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(s1, std::sqrt(0.5), 1e-12);
  auto [c2, s2] = cordic_rotate(kHalfPi, 52);
  EXPECT_NEAR(c2, 0.0, 1e-12);
  EXPECT_NEAR(s2, 1.0, 1e-12);
  EXPECT_THROW(cordic_rotate(0.0, 0), dyadic::DomainError);
  EXPECT_THROW(cordic_rotate(0.0, 61), dyadic::DomainError);
}

TEST(Cordic, AtanExamples) {
  EXPECT_NEAR(cordic_atan(0.0, 40), 0.0, 1e-12);
  EXPECT_NEAR(cordic_atan(1.0, 45), std::numbers::pi / 4, 1e-12);
  EXPECT_NEAR(cordic_atan(std::ldexp(1.0, -10), 45), std::atan(std::ldexp(1.0, -10)), 1e-12);
  EXPECT_NEAR(cordic_atan(100.0, 52), std::atan(100.0), 1e-12);
  EXPECT_THROW(cordic_atan(-1.0, 40), dyadic::DomainError);
}

TEST(Cordic, ErrorShrinksThenFloors) {
  double prev = cordic_mxm(4);
  for (int iters = 8; iters <= 48; iters += 4) {
    const double e = cordic_mxm(iters);
    EXPECT_LT(e, prev) << iters;
    prev = e;
  }
  EXPECT_LE(cordic_mxm(52), 1e-12);
  EXPECT_LE(cordic_mxm(60), 1e-12);
}

TEST(Cordic, UnitCircle) {
  for (int i = 0; i <= 500; ++i) {
    const auto [c, s] = cordic_rotate(kHalfPi * i / 500.0, 52);
    EXPECT_NEAR(c * c + s * s, 1.0, 1e-12);
  }
}
