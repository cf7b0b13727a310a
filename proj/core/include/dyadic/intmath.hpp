#pragma once

#include <cstdint>

namespace dyadic {

/// Fixnum word model: 60 usable bits in a signed 64-bit word.
struct WordLimits {
  static constexpr int maxbit = 60;
  static constexpr std::int64_t maxval = (std::int64_t{1} << maxbit) - 1;
  static constexpr std::int64_t maxstart = std::int64_t{1} << (maxbit - 2);
};

static_assert(WordLimits::maxval == 1152921504606846975);
static_assert(WordLimits::maxstart == 288230376151711744);

/// Largest power of four not exceeding n, scanning down from 2^(maxbit-2).
/// Requires 1 <= n <= maxval.
std::int64_t sqrt_start(std::int64_t n);

struct IsqrtTrace {
  std::int64_t root = 0;
  int iterations = 0;
};

/// Shift-and-add square root: floor(sqrt(n)).
///
/// start is the initial error term and must be a power of four no smaller
/// than sqrt_start(n) (0 only when n == 0). The loop runs exactly
/// log4(start) + 1 times, shifting two bits out of the error term per pass.
IsqrtTrace isqrt_traced(std::int64_t n, std::int64_t start);

inline std::int64_t isqrt(std::int64_t n, std::int64_t start) {
  return isqrt_traced(n, start).root;
}

/// floor(sqrt(n)) with the start term computed from n.
std::int64_t isqrt(std::int64_t n);

/// A fraction num/den with den > 0. Not necessarily reduced.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double to_double() const noexcept {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

/// Best word-sized rational approximation of sqrt(p/q): both terms are
/// scaled by floor(maxval / max(p, q)) before taking integer roots.
/// Requires 0 <= p <= maxval and 1 <= q <= maxval.
Fraction rational_sqrt(std::int64_t p, std::int64_t q);

}  // namespace dyadic
