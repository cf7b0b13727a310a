#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dyadic/dyadic_rational.hpp"
#include "dyadic/errors.hpp"

using dyadic::DyadicRational;
using dyadic::normalize;
using dyadic::parse_dyadic;
using dyadic::quadrature;
using dyadic::QuadratureFrame;

TEST(Normalize, CancelsCommonFactor) {
  const auto x = normalize(4, 3);
  EXPECT_EQ(x.num(), 1);
  EXPECT_EQ(x.exp(), 1);
}

TEST(Normalize, ZeroIsCanonical) {
  const auto x = normalize(0, 5);
  EXPECT_EQ(x.num(), 0);
  EXPECT_EQ(x.exp(), 0);
  EXPECT_EQ(x.denominator(), 1U);
}

TEST(Normalize, AlreadyCanonical) {
  const auto x = normalize(5, 4);
  EXPECT_EQ(x.num(), 5);
  EXPECT_EQ(x.exp(), 4);
}

TEST(Normalize, Errors) {
  EXPECT_THROW(normalize(1, 63), dyadic::PrecisionError);
  EXPECT_THROW(normalize(1, -1), dyadic::DomainError);
  EXPECT_NO_THROW(normalize(1, 62));
}

TEST(Normalize, Idempotent) {
  for (std::int64_t n = -40; n <= 40; ++n) {
    for (int e = 0; e <= 8; ++e) {
      const auto a = normalize(n, e);
      EXPECT_EQ(normalize(a.num(), a.exp()), a);
      EXPECT_DOUBLE_EQ(a.to_double(), std::ldexp(static_cast<double>(n), -e));
      EXPECT_TRUE(a.exp() == 0 || (a.num() & 1) == 1 || (a.num() & 1) == -1);
    }
  }
}

TEST(Arithmetic, AddSubCompare) {
  const auto a = parse_dyadic("3/8");
  const auto b = parse_dyadic("1/8");
  EXPECT_EQ(a + b, parse_dyadic("1/2"));
  EXPECT_EQ(a - b, parse_dyadic("1/4"));
  EXPECT_EQ(-a, parse_dyadic("-3/8"));
  EXPECT_LT(b, a);
  EXPECT_GT(DyadicRational::integer(1), a);
  EXPECT_EQ(a.scaled(2), parse_dyadic("3/2"));
}

TEST(Parse, AcceptedForms) {
  EXPECT_EQ(parse_dyadic("5/16"), normalize(5, 4));
  EXPECT_EQ(parse_dyadic("5/2^4"), normalize(5, 4));
  EXPECT_EQ(parse_dyadic("-3/8"), normalize(-3, 3));
  EXPECT_EQ(parse_dyadic("7"), normalize(7, 0));
  EXPECT_EQ(parse_dyadic("6/12"), normalize(1, 1));
}

TEST(Parse, RejectsNonDyadic) {
  EXPECT_THROW(parse_dyadic("5/15"), dyadic::NonDyadicError);
  EXPECT_THROW(parse_dyadic("1/3"), dyadic::NonDyadicError);
  EXPECT_THROW(parse_dyadic("1/0"), dyadic::DomainError);
  EXPECT_THROW(parse_dyadic("abc"), dyadic::DomainError);
  EXPECT_THROW(parse_dyadic(""), dyadic::DomainError);
}

TEST(Print, RoundTrips) {
  EXPECT_EQ(to_string(normalize(5, 4)), "5/16");
  EXPECT_EQ(to_string(normalize(-3, 3)), "-3/8");
  EXPECT_EQ(to_string(normalize(0, 7)), "0");
  EXPECT_EQ(to_string(normalize(3, 0)), "3");
  for (const char* s : {"1/2", "-1/4", "1023/1024", "0", "-5"}) {
    EXPECT_EQ(to_string(parse_dyadic(s)), s);
  }
}

TEST(Quadrature, Examples) {
  EXPECT_EQ(quadrature(parse_dyadic("3/8")), (QuadratureFrame{parse_dyadic("1/8"), -1, 1}));
  EXPECT_EQ(quadrature(parse_dyadic("0")), (QuadratureFrame{parse_dyadic("0"), 1, 1}));
  EXPECT_EQ(quadrature(parse_dyadic("-1/8")), (QuadratureFrame{parse_dyadic("1/8"), 1, -1}));
}

TEST(Quadrature, ReconstructsCosSin) {
  for (int k = 0; k <= 10; ++k) {
    const std::int64_t lim = std::int64_t{1} << (k + 1);
    for (std::int64_t n = -lim; n <= lim; ++n) {
      const auto x = normalize(n, k);
      const auto f = quadrature(x);
      ASSERT_GE(f.y, DyadicRational{});
      ASSERT_LE(f.y, parse_dyadic("1/4"));
      const double t = 2.0 * std::numbers::pi * x.to_double();
      const double ty = 2.0 * std::numbers::pi * f.y.to_double();
      EXPECT_NEAR(f.inv * std::cos(ty), std::cos(t), 1e-12) << to_string(x);
      EXPECT_NEAR(f.mir * std::sin(ty), std::sin(t), 1e-12) << to_string(x);
      EXPECT_EQ(quadrature(f.y, f.inv, f.mir), f);
    }
  }
}

TEST(Quadrature, LargeArgumentsAreCheap) {
  const auto f = quadrature(normalize(std::int64_t{1} << 55, 0) + parse_dyadic("3/8"));
  EXPECT_EQ(f, (QuadratureFrame{parse_dyadic("1/8"), -1, 1}));
}
