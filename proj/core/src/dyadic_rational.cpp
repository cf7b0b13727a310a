#include "dyadic/dyadic_rational.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "dyadic/errors.hpp"

namespace dyadic {
namespace {

__extension__ using i128 = __int128;

constexpr std::int64_t kMinWord = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMaxWord = std::numeric_limits<std::int64_t>::max();

// Canonicalizes a wide intermediate, failing if it does not fit the word model.
DyadicRational from_wide(i128 num, int exp) {
  if (num == 0) return normalize(0, 0);
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (exp > DyadicRational::kMaxExp) {
    throw PrecisionError("dyadic denominator exceeds 2^62");
  }
  if (num <= kMinWord || num > kMaxWord) {
    throw PrecisionError("dyadic numerator overflows 64 bits");
  }
  return normalize(static_cast<std::int64_t>(num), exp);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename Int>
Int parse_int(std::string_view s, std::string_view whole) {
  Int value{};
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last) {
    throw DomainError("malformed dyadic rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DyadicRational normalize(std::int64_t num, int exp) {
  if (exp < 0) throw DomainError("negative denominator exponent");
  if (exp > DyadicRational::kMaxExp) {
    throw PrecisionError("dyadic denominator exponent " + std::to_string(exp) +
                         " exceeds 62");
  }
  if (num == kMinWord) throw DomainError("numerator magnitude must be below 2^63");
  if (num == 0) return DyadicRational{};
  const int shift = std::min(exp, std::countr_zero(static_cast<std::uint64_t>(num)));
  return DyadicRational(num >> shift, exp - shift);
}

DyadicRational DyadicRational::integer(std::int64_t n) { return normalize(n, 0); }

double DyadicRational::to_double() const noexcept {
  return std::ldexp(static_cast<double>(num_), -exp_);
}

DyadicRational DyadicRational::scaled(int power) const {
  if (num_ == 0) return *this;
  if (power <= 0) return from_wide(num_, exp_ - power);
  if (power <= exp_) return from_wide(num_, exp_ - power);
  const int left = power - exp_;
  if (left >= 63) throw PrecisionError("dyadic numerator overflows 64 bits");
  return from_wide(static_cast<i128>(num_) << left, 0);
}

DyadicRational DyadicRational::operator-() const { return normalize(-num_, exp_); }

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  const int exp = std::max(a.exp_, b.exp_);
  const i128 lhs = static_cast<i128>(a.num_) << (exp - a.exp_);
  const i128 rhs = static_cast<i128>(b.num_) << (exp - b.exp_);
  return from_wide(lhs + rhs, exp);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  return a + (-b);
}

std::strong_ordering operator<=>(const DyadicRational& a,
                                 const DyadicRational& b) noexcept {
  const int exp = std::max(a.exp_, b.exp_);
  const i128 lhs = static_cast<i128>(a.num_) << (exp - a.exp_);
  const i128 rhs = static_cast<i128>(b.num_) << (exp - b.exp_);
  return lhs <=> rhs;
}

DyadicRational parse_dyadic(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return normalize(parse_int<std::int64_t>(s, text), 0);
  }
  const auto num = parse_int<std::int64_t>(trim(s.substr(0, slash)), text);
  const std::string_view den = trim(s.substr(slash + 1));

  if (den.starts_with("2^")) {
    const int k = parse_int<int>(den.substr(2), text);
    if (k < 0) throw DomainError("negative power in '" + std::string(text) + "'");
    // n/2^k with k > 62 is fine as long as the reduced form fits.
    return from_wide(num, k);
  }

  const auto m = parse_int<std::int64_t>(den, text);
  if (m == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  if (m < 0) throw DomainError("negative denominator in '" + std::string(text) + "'");
  if (num == kMinWord) throw DomainError("numerator magnitude must be below 2^63");
  const std::int64_t g = std::gcd(num, m);
  const auto reduced = static_cast<std::uint64_t>(m / g);
  if (!std::has_single_bit(reduced)) {
    throw NonDyadicError("'" + std::string(text) +
                         "' is not a dyadic rational (denominator not a power of two)");
  }
  return normalize(num / g, std::countr_zero(reduced));
}

std::string to_string(const DyadicRational& x) {
  if (x.exp() == 0) return std::to_string(x.num());
  return std::to_string(x.num()) + "/" + std::to_string(x.denominator());
}

std::ostream& operator<<(std::ostream& os, const DyadicRational& x) {
  return os << to_string(x);
}

QuadratureFrame quadrature(const DyadicRational& x, int inv, int mir) {
  if ((inv != 1 && inv != -1) || (mir != 1 && mir != -1)) {
    throw DomainError("quadrature signs must be +1 or -1");
  }

  // Reduce modulo one full turn into (-1/2, 1/2].
  DyadicRational y;
  if (x.exp() > 0) {
    const std::int64_t period = std::int64_t{1} << x.exp();
    const std::int64_t half = period >> 1;
    std::int64_t r = x.num() % period;
    if (r > half) r -= period;
    if (r <= -half) r += period;
    y = normalize(r, x.exp());
  }

  static const DyadicRational kQuarter = normalize(1, 2);
  static const DyadicRational kHalf = normalize(1, 1);

  for (;;) {
    if (y > kQuarter || y < -kQuarter) {
      y = y - (y.sign() > 0 ? kHalf : -kHalf);
      inv = -inv;
      mir = -mir;
    } else if (y.sign() < 0) {
      y = -y;
      mir = -mir;
    } else {
      return {y, inv, mir};
    }
  }
}

}  // namespace dyadic
