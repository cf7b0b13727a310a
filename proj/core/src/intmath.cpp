#include "dyadic/intmath.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dyadic/errors.hpp"

namespace dyadic {
namespace {

bool is_power_of_four(std::int64_t v) {
  const auto u = static_cast<std::uint64_t>(v);
  return v > 0 && std::has_single_bit(u) && (std::countr_zero(u) % 2 == 0);
}

}  // namespace

std::int64_t sqrt_start(std::int64_t n) {
  if (n < 1) throw DomainError("sqrt_start requires n >= 1");
  if (n > WordLimits::maxval) throw PrecisionError("sqrt_start argument exceeds maxval");
  std::int64_t bit = WordLimits::maxstart;
  while (bit > n) bit >>= 2;
  return bit;
}

IsqrtTrace isqrt_traced(std::int64_t n, std::int64_t start) {
  if (n < 0) throw DomainError("isqrt of negative number");
  if (start == 0) {
    if (n != 0) throw DomainError("isqrt start 0 is only valid for n = 0");
    return {0, 0};
  }
  if (!is_power_of_four(start)) {
    throw DomainError("isqrt start " + std::to_string(start) + " is not a power of four");
  }
  // A start term below the leading power of four of n cannot reach floor(sqrt(n)).
  if (start <= n / 4) {
    throw DomainError("isqrt start is smaller than sqrt_start(n)");
  }

  IsqrtTrace t;
  std::int64_t number = n;
  std::int64_t result = 0;
  std::int64_t error = start;
  for (;;) {
    if (error == 0) break;
    ++t.iterations;
    if (number >= result + error) {
      number -= result + error;
      result = error + (result >> 1);
    } else {
      result >>= 1;
    }
    error >>= 2;
  }
  t.root = result;
  return t;
}

std::int64_t isqrt(std::int64_t n) {
  return n == 0 ? 0 : isqrt(n, sqrt_start(n));
}

Fraction rational_sqrt(std::int64_t p, std::int64_t q) {
  if (q == 0) throw DivisionByZeroError("rational_sqrt with zero denominator");
  if (p < 0 || q < 0) throw DomainError("rational_sqrt of a negative ratio");
  if (p > WordLimits::maxval || q > WordLimits::maxval) {
    throw PrecisionError("rational_sqrt operands exceed maxval");
  }
  const std::int64_t f = WordLimits::maxval / std::max(p, q);
  return {isqrt(p * f), isqrt(q * f)};
}

}  // namespace dyadic
