#pragma once

#include <bit>
#include <cstdint>

#include "dyadic/dyadic_rational.hpp"

namespace dyadic {

/// Top two bits of a signature word. Its low bit is the sign under the
/// outermost radical: 0 for cosine (+), 1 for sine (-).
enum class SigSeed : std::uint64_t {
  Cos = 0b10,
  Sin = 0b11,
};

/// Sentinel-primed sign mask ("sig'").
///
/// Layout, most significant first: the seed (10 or 11), then one bit per
/// radical level below the outermost, 1 meaning a negative sign. Bit 0 is
/// the innermost level, which is what the unwind consumes first. The
/// sentinel makes the depth recoverable from the word alone.
class SignatureWord {
 public:
  /// Throws DomainError unless bits >= 2.
  explicit SignatureWord(std::uint64_t bits);

  std::uint64_t bits() const noexcept { return bits_; }

  /// Number of radical levels below the outermost one.
  int depth() const noexcept { return std::bit_width(bits_) - 2; }

  SigSeed seed() const noexcept {
    return static_cast<SigSeed>(bits_ >> depth());
  }

  /// Sign of level i (0 = outermost, the seed bit; depth() = innermost) as
  /// +1 or -1. Throws DomainError for i outside [0, depth()].
  int level_sign(int i) const;

  friend bool operator==(SignatureWord, SignatureWord) = default;

 private:
  std::uint64_t bits_;
};

/// Maximum depth of a word built from a 62-bit denominator.
inline constexpr int kMaxSignatureDepth = 61;

/// Locates x in (0, 1) in the binary search tree of nested-radical signs.
///
/// With x = n/2^k (n odd), halves m = 2^k each step and appends one turn bit
/// derived from the parity of the word built so far, stopping when n hits
/// the midpoint. The result has depth k - 1.
/// Throws DomainError unless 0 < x < 1.
SignatureWord build_signature(const DyadicRational& x, SigSeed seed);

/// The turn-history mask without sentinel and seed: sig' - seed * 2^depth.
/// Throws InconsistentSeedError if the word was not built with seed.
std::uint64_t unprimed_bits(SignatureWord sig, SigSeed seed);

/// Closed-form sign of level i for cos(n*pi / 2^(k+1)):
///   s_i = (-1)^floor(n * 2^i / 2^(k+1) + 1/2)
/// evaluated in exact integer arithmetic. Independent of build_signature and
/// meant as a reference for it.
/// Requires 0 < n < 2^k, 0 <= i <= k, k <= 62.
int sign_oracle(std::int64_t n, int k, int i);

}  // namespace dyadic
