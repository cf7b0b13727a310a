#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dyadic {

/// An exact number num / 2^exp.
///
/// Always held in canonical form: either exp == 0, or num is odd. Two values
/// are therefore equal exactly when their fields are equal. The denominator
/// exponent is capped at 62 so that 2^exp and the signature words derived from
/// it stay inside a signed 64-bit word.
class DyadicRational {
 public:
  static constexpr int kMaxExp = 62;

  constexpr DyadicRational() noexcept = default;

  /// Integer value n / 2^0.
  static DyadicRational integer(std::int64_t n);

  std::int64_t num() const noexcept { return num_; }
  int exp() const noexcept { return exp_; }
  std::uint64_t denominator() const noexcept { return std::uint64_t{1} << exp_; }

  bool is_zero() const noexcept { return num_ == 0; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  double to_double() const noexcept;

  /// Multiplies by 2^power (power may be negative).
  DyadicRational scaled(int power) const;

  DyadicRational operator-() const;
  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b);
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b);

  friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
  friend std::strong_ordering operator<=>(const DyadicRational& a,
                                          const DyadicRational& b) noexcept;

 private:
  friend DyadicRational normalize(std::int64_t num, int exp);
  constexpr DyadicRational(std::int64_t num, int exp) noexcept
      : num_(num), exp_(exp) {}

  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// Canonical DyadicRational equal to num / 2^exp.
/// Throws PrecisionError when exp > 62 and DomainError when exp < 0 or
/// num == INT64_MIN.
DyadicRational normalize(std::int64_t num, int exp);

/// Parses "n", "n/m" (m reduced against n must be a power of two) or
/// "n/2^k". A leading minus on the numerator is accepted.
/// Throws NonDyadicError for denominators that are not powers of two after
/// reduction, DomainError for malformed text or a zero denominator.
DyadicRational parse_dyadic(std::string_view text);

/// "n/m" with m = 2^exp, or just "n" when exp == 0.
std::string to_string(const DyadicRational& x);
std::ostream& operator<<(std::ostream& os, const DyadicRational& x);

/// Reduced argument of the full-circle functions.
struct QuadratureFrame {
  DyadicRational y;  // in [0, 1/4] turn
  int inv = 1;       // sign of cosine in the source quadrant
  int mir = 1;       // sign of sine in the source quadrant

  friend bool operator==(const QuadratureFrame&, const QuadratureFrame&) = default;
};

/// Folds x (in turns, full circle = 1) into [0, 1/4], recording the cosine
/// and sine signs of the quadrant it came from.
///
/// x is first reduced modulo 1 into (-1/2, 1/2], after which at most one
/// half-turn shift and one reflection apply:
///   |x| > 1/4  ->  (x - sign(x)/2, -inv, -mir)
///   x < 0      ->  (-x, inv, -mir)
/// inv and mir must be +1 or -1.
QuadratureFrame quadrature(const DyadicRational& x, int inv = 1, int mir = 1);

}  // namespace dyadic
