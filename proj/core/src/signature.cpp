#include "dyadic/signature.hpp"

#include <string>

#include "dyadic/errors.hpp"

namespace dyadic {

SignatureWord::SignatureWord(std::uint64_t bits) : bits_(bits) {
  if (bits < 2) throw DomainError("signature word must be at least 2");
}

int SignatureWord::level_sign(int i) const {
  if (i < 0 || i > depth()) {
    throw DomainError("signature level " + std::to_string(i) + " out of range");
  }
  return ((bits_ >> (depth() - i)) & 1U) ? -1 : 1;
}

SignatureWord build_signature(const DyadicRational& x, SigSeed seed) {
  if (x.sign() <= 0 || x.exp() == 0) {
    throw DomainError("build_signature requires 0 < x < 1, got " + to_string(x));
  }
  // Canonical form has an odd numerator; 0 < x < 1 then means exp >= 1.
  auto n = static_cast<std::uint64_t>(x.num());
  std::uint64_t m = x.denominator();
  if (n >= m) {
    throw DomainError("build_signature requires 0 < x < 1, got " + to_string(x));
  }

  auto s = static_cast<std::uint64_t>(seed);
  for (;;) {
    m >>= 1;
    if (n == m) return SignatureWord(s);
    // The sentinel adds one set bit, so parity logic is the mirror of the
    // unprimed mask.
    const std::uint64_t parity = std::popcount(s) & 1U;
    if (n < m) {
      s = (s << 1) | (1U - parity);
    } else {
      s = (s << 1) | parity;
      n -= m;
    }
  }
}

std::uint64_t unprimed_bits(SignatureWord sig, SigSeed seed) {
  const std::uint64_t top = static_cast<std::uint64_t>(seed) << sig.depth();
  if (sig.seed() != seed) {
    throw InconsistentSeedError("signature " + std::to_string(sig.bits()) +
                                " was not built with seed " +
                                std::to_string(static_cast<std::uint64_t>(seed)));
  }
  return sig.bits() - top;
}

int sign_oracle(std::int64_t n, int k, int i) {
  if (k < 0 || k > DyadicRational::kMaxExp) throw DomainError("sign_oracle: k out of range");
  if (n <= 0 || static_cast<std::uint64_t>(n) >= (std::uint64_t{1} << k)) {
    throw DomainError("sign_oracle: n must satisfy 0 < n < 2^k");
  }
  if (i < 0 || i > k) throw DomainError("sign_oracle: level index out of range");
  __extension__ using u128 = unsigned __int128;
  // floor((n * 2^i + 2^k) / 2^(k+1))
  const u128 scaled = (static_cast<u128>(n) << i) + (static_cast<u128>(1) << k);
  const u128 q = scaled >> (k + 1);
  return (q & 1U) ? -1 : 1;
}

}  // namespace dyadic
