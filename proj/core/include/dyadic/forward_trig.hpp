#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "dyadic/dyadic_rational.hpp"
#include "dyadic/intmath.hpp"
#include "dyadic/signature.hpp"

namespace dyadic {

/// Forward functions on quarter-turn arguments: x denotes the angle x*pi/2.
enum class TrigKind { Cos, Sin, Tan, Cot, Cos2, Sin2, Tan2, Cot2 };

SigSeed seed_of(TrigKind kind) noexcept;
std::string_view name_of(TrigKind kind) noexcept;
std::optional<TrigKind> parse_trig_kind(std::string_view name) noexcept;

/// Value of the rebalanced radical, 4*cos^2 (cosine seed) or 4*sin^2 (sine
/// seed) of the angle.
///
/// complement holds 4 - value, carried through the unwind alongside it so
/// that neither side is ever formed by cancellation. steps counts the square
/// roots taken.
struct RadicalValue {
  double value = 0.0;
  double complement = 4.0;
  int steps = 0;
};

/// Unwinds every level of sig, innermost first: for each turn bit b,
/// w <- 2 + (1 - 2b) * sqrt(w), starting from w = 2.
///
/// Each level takes one square root r = sqrt(w); the larger of the two
/// successors is 2 + r and the smaller is (4 - w) / (2 + r), so the pair
/// (w, 4 - w) is propagated without subtracting nearly equal numbers.
RadicalValue radical_unwind(SignatureWord sig);

/// Same recurrence over only the low depth bits of turn_bits (no sentinel).
/// Throws DomainError if depth is negative or greater than 61.
RadicalValue radical_unwind_truncated(std::uint64_t turn_bits, int depth);

/// The textbook form of the unwind, a <- (1 - 2b) * sqrt(2 + a), returning
/// 2 + a. Loses accuracy where 2 + a cancels; kept as a comparison point.
double radical_unwind_plain(SignatureWord sig);

/// Radical value for x in [0, 1]; the endpoints are exact.
/// Throws DomainError outside [0, 1].
RadicalValue dyadic_loop(const DyadicRational& x, SigSeed seed);

enum class Arithmetic {
  Floating,  // binary64 with correctly rounded sqrt
  Rational,  // word-sized fractions through rational_sqrt
};

/// Evaluates kind at x*pi/2 for x in [0, 1].
/// Throws PoleError for Tan/Tan2 at x = 1 and Cot/Cot2 at x = 0, and
/// DomainError for x outside [0, 1].
double forward(TrigKind kind, const DyadicRational& x,
               Arithmetic arithmetic = Arithmetic::Floating);

/// Full-circle cos/sin with x in turns (1 = full circle), any magnitude.
/// Only Cos and Sin are accepted; other kinds raise DomainError.
double full_circle(TrigKind kind, const DyadicRational& turns);

/// Radical value 4*cos^2 or 4*sin^2 carried entirely in word-sized
/// fractions. Every square root goes through rational_sqrt, so the result is
/// a best rational approximation at each level (about 30 bits).
Fraction dyadic_loop_rational(const DyadicRational& x, SigSeed seed);

}  // namespace dyadic
