#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "dyadic/errors.hpp"
#include "dyadic/forward_trig.hpp"
#include "dyadic/metrics.hpp"

using namespace dyadic;

namespace {

double quarter(std::int64_t n, int k) {
  return static_cast<double>(n) * std::numbers::pi / std::ldexp(1.0, k + 1);
}

}  // namespace

TEST(RadicalUnwind, Examples) {
  EXPECT_EQ(radical_unwind(SignatureWord(2)).value, 2.0);
  EXPECT_DOUBLE_EQ(radical_unwind(SignatureWord(4)).value, 2.0 + std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(radical_unwind(SignatureWord(5)).value, 2.0 - std::sqrt(2.0));
  EXPECT_EQ(radical_unwind(SignatureWord(19)).steps, 3);
}

TEST(RadicalUnwind, Truncated) {
  EXPECT_EQ(radical_unwind_truncated(12345, 0).value, 2.0);
  EXPECT_EQ(radical_unwind_truncated(0, 1).value, radical_unwind(SignatureWord(4)).value);
  EXPECT_EQ(radical_unwind_truncated(1, 1).value, radical_unwind(SignatureWord(5)).value);
  EXPECT_EQ(radical_unwind_truncated(3, 4).value, radical_unwind(SignatureWord(0b10'0011)).value);
  EXPECT_THROW(radical_unwind_truncated(0, 62), DomainError);
  EXPECT_THROW(radical_unwind_truncated(0, -1), DomainError);
}

TEST(RadicalUnwind, PlainFormAgreesLoosely) {
  for (int k = 1; k <= 10; ++k) {
    for (std::int64_t n = 1; n < (std::int64_t{1} << k); n += 2) {
      const auto w = build_signature(normalize(n, k), SigSeed::Cos);
      EXPECT_NEAR(radical_unwind_plain(w), radical_unwind(w).value, 1e-13);
    }
  }
}

TEST(RadicalUnwind, ValueInRangeAndComplement) {
  for (int k = 1; k <= 12; ++k) {
    for (std::int64_t n = 1; n < (std::int64_t{1} << k); n += 2) {
      for (auto seed : {SigSeed::Cos, SigSeed::Sin}) {
        const auto r = radical_unwind(build_signature(normalize(n, k), seed));
        ASSERT_GE(r.value, 0.0);
        ASSERT_LE(r.value, 4.0);
        ASSERT_NEAR(r.value + r.complement, 4.0, 1e-15);
      }
    }
  }
}

TEST(DyadicLoop, Examples) {
  EXPECT_EQ(dyadic_loop(parse_dyadic("0"), SigSeed::Cos).value, 4.0);
  EXPECT_EQ(dyadic_loop(parse_dyadic("1"), SigSeed::Sin).value, 4.0);
  EXPECT_EQ(dyadic_loop(parse_dyadic("1/2"), SigSeed::Cos).value, 2.0);
  EXPECT_EQ(dyadic_loop(parse_dyadic("1"), SigSeed::Cos).value, 0.0);
  EXPECT_EQ(dyadic_loop(parse_dyadic("0"), SigSeed::Sin).value, 0.0);
  EXPECT_THROW(dyadic_loop(parse_dyadic("5/4"), SigSeed::Cos), DomainError);
  EXPECT_THROW(dyadic_loop(parse_dyadic("-1/4"), SigSeed::Cos), DomainError);
}

TEST(Forward, Examples) {
  EXPECT_NEAR(forward(TrigKind::Cos, parse_dyadic("1/2")), 0.7071067811865476, 1e-16);
  EXPECT_NEAR(forward(TrigKind::Tan, parse_dyadic("1/2")), 1.0, 1e-15);
  EXPECT_NEAR(forward(TrigKind::Cos, parse_dyadic("5/16")), 0.881921264348355, 1e-15);
  EXPECT_EQ(forward(TrigKind::Cos, parse_dyadic("0")), 1.0);
  EXPECT_EQ(forward(TrigKind::Sin, parse_dyadic("1")), 1.0);
  EXPECT_EQ(forward(TrigKind::Cos, parse_dyadic("1")), 0.0);
  EXPECT_EQ(forward(TrigKind::Tan, parse_dyadic("0")), 0.0);
  EXPECT_EQ(forward(TrigKind::Cot, parse_dyadic("1")), 0.0);
}

TEST(Forward, Poles) {
  EXPECT_THROW(forward(TrigKind::Tan, parse_dyadic("1")), PoleError);
  EXPECT_THROW(forward(TrigKind::Cot, parse_dyadic("0")), PoleError);
  EXPECT_THROW(forward(TrigKind::Tan2, parse_dyadic("1")), PoleError);
  EXPECT_THROW(forward(TrigKind::Cot2, parse_dyadic("0")), PoleError);
}

TEST(Forward, Kinds) {
  for (auto [name, kind] : {std::pair{"cos", TrigKind::Cos}, {"sin", TrigKind::Sin},
                            {"tan", TrigKind::Tan}, {"cot", TrigKind::Cot},
                            {"cos2", TrigKind::Cos2}, {"sin2", TrigKind::Sin2},
                            {"tan2", TrigKind::Tan2}, {"cot2", TrigKind::Cot2}}) {
    EXPECT_EQ(parse_trig_kind(name), kind);
    EXPECT_EQ(name_of(kind), name);
  }
  EXPECT_FALSE(parse_trig_kind("sec").has_value());
  EXPECT_EQ(seed_of(TrigKind::Tan2), SigSeed::Cos);
  EXPECT_EQ(seed_of(TrigKind::Cot), SigSeed::Sin);
}

TEST(Forward, AccuracyAgainstLibm) {
  for (int k = 1; k <= 12; ++k) {
    for (std::int64_t n = 0; n <= (std::int64_t{1} << k); ++n) {
      const auto x = normalize(n, k);
      const double t = quarter(n, k);
      ASSERT_NEAR(forward(TrigKind::Cos, x), std::cos(t), 5e-16) << to_string(x);
      ASSERT_NEAR(forward(TrigKind::Sin, x), std::sin(t), 5e-16) << to_string(x);
      ASSERT_NEAR(forward(TrigKind::Cos2, x), std::cos(t) * std::cos(t), 1e-15);
      ASSERT_NEAR(forward(TrigKind::Sin2, x), std::sin(t) * std::sin(t), 1e-15);
    }
  }
}

TEST(Forward, TangentAccuracy) {
  for (int k = 1; k <= 12; ++k) {
    for (std::int64_t n = 0; n <= (std::int64_t{1} << k); ++n) {
      const auto x = normalize(n, k);
      if (n != (std::int64_t{1} << k)) {
        const double ref = metrics::reference_value(TrigKind::Tan, n, k,
                                                    metrics::Reference::LibmCorrected);
        ASSERT_NEAR(forward(TrigKind::Tan, x), ref, 1e-12) << to_string(x);
      }
      if (n != 0) {
        const double ref = metrics::reference_value(TrigKind::Cot, n, k,
                                                    metrics::Reference::LibmCorrected);
        ASSERT_NEAR(forward(TrigKind::Cot, x), ref, 1e-12) << to_string(x);
      }
    }
  }
}

TEST(Forward, TangentSquares) {
  for (int k = 1; k <= 8; ++k) {
    for (std::int64_t n = 1; n < (std::int64_t{1} << k); ++n) {
      const auto x = normalize(n, k);
      const double t = forward(TrigKind::Tan, x);
      const double c = forward(TrigKind::Cot, x);
      EXPECT_NEAR(forward(TrigKind::Tan2, x), t * t, 1e-9 * std::max(1.0, t * t));
      EXPECT_NEAR(forward(TrigKind::Cot2, x), c * c, 1e-9 * std::max(1.0, c * c));
      EXPECT_NEAR(t * c, 1.0, 1e-12);
    }
  }
}

TEST(Forward, Pythagorean) {
  for (int k = 1; k <= 12; ++k) {
    for (std::int64_t n = 0; n <= (std::int64_t{1} << k); ++n) {
      const auto x = normalize(n, k);
      ASSERT_NEAR(forward(TrigKind::Cos2, x) + forward(TrigKind::Sin2, x), 1.0, 1e-14);
    }
  }
}

TEST(Forward, Complementarity) {
  const auto one = DyadicRational::integer(1);
  for (int k = 1; k <= 10; ++k) {
    for (std::int64_t n = 0; n <= (std::int64_t{1} << k); ++n) {
      const auto x = normalize(n, k);
      ASSERT_NEAR(forward(TrigKind::Sin, x), forward(TrigKind::Cos, one - x), 1e-15);
    }
  }
}

TEST(Forward, UnwindStepCount) {
  for (int k = 1; k <= 20; ++k) {
    for (std::int64_t n = 1; n < (std::int64_t{1} << k); n += 2) {
      const auto x = normalize(n, k);
      ASSERT_EQ(dyadic_loop(x, SigSeed::Cos).steps, k - 1);
      ASSERT_EQ(dyadic_loop(x, SigSeed::Sin).steps, k - 1);
    }
  }
}

TEST(Forward, RationalMode) {
  for (int k = 1; k <= 8; ++k) {
    for (std::int64_t n = 0; n <= (std::int64_t{1} << k); ++n) {
      const auto x = normalize(n, k);
      EXPECT_NEAR(forward(TrigKind::Cos, x, Arithmetic::Rational), std::cos(quarter(n, k)),
                  1e-7) << to_string(x);
    }
  }
}

TEST(Forward, RejectsOutOfRange) {
  EXPECT_THROW(forward(TrigKind::Cos, parse_dyadic("3/2")), DomainError);
  EXPECT_THROW(forward(TrigKind::Sin, parse_dyadic("-1/2")), DomainError);
}

TEST(FullCircle, Examples) {
  EXPECT_NEAR(full_circle(TrigKind::Cos, parse_dyadic("3/8")), -std::sqrt(0.5), 1e-16);
  EXPECT_EQ(full_circle(TrigKind::Sin, parse_dyadic("0")), 0.0);
  EXPECT_FALSE(std::signbit(full_circle(TrigKind::Sin, parse_dyadic("0"))));
  EXPECT_EQ(full_circle(TrigKind::Cos, parse_dyadic("1")), 1.0);
  EXPECT_THROW(full_circle(TrigKind::Tan, parse_dyadic("1/8")), DomainError);
}

TEST(FullCircle, MatchesLibm) {
  for (int k = 0; k <= 8; ++k) {
    const std::int64_t lim = std::int64_t{3} << k;
    for (std::int64_t n = -lim; n <= lim; ++n) {
      const auto x = normalize(n, k);
      const double t = 2.0 * std::numbers::pi * x.to_double();
      ASSERT_NEAR(full_circle(TrigKind::Cos, x), std::cos(t), 1e-14) << to_string(x);
      ASSERT_NEAR(full_circle(TrigKind::Sin, x), std::sin(t), 1e-14) << to_string(x);
    }
  }
}
