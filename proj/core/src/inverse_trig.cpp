#include "dyadic/inverse_trig.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "dyadic/errors.hpp"

namespace dyadic {
namespace {

struct InverseInfo {
  InverseKind kind;
  std::string_view name;
  int seed_bit;
  TrigKind forward;
};

constexpr std::array<InverseInfo, 4> kInverseKinds{{
    {InverseKind::Acos, "acos", 0, TrigKind::Cos},
    {InverseKind::Asin, "asin", 1, TrigKind::Sin},
    {InverseKind::Atan, "atan", 0, TrigKind::Tan},
    {InverseKind::Acot, "acot", 1, TrigKind::Cot},
}};

const InverseInfo& info(InverseKind kind) noexcept {
  return kInverseKinds[static_cast<std::size_t>(kind)];
}

// (2v)^2 for v = 1 can land a few ulp above 4.
const double kClampMargin = 4.0 * (std::nextafter(4.0, 5.0) - 4.0);

int parity(std::uint64_t s) noexcept { return std::popcount(s) & 1; }

// Quarter-turn search state y = n / 2^k with n odd.
struct Cursor {
  std::int64_t n = 1;
  int k = 1;

  void step(int direction) noexcept {
    n = 2 * n + direction;
    ++k;
  }
  DyadicRational value() const { return normalize(n, k); }
};

void check_seed_bit(int ss) {
  if (ss != 0 && ss != 1) throw DomainError("search seed bit must be 0 or 1");
}

}  // namespace

int seed_bit_of(InverseKind kind) noexcept { return info(kind).seed_bit; }

TrigKind forward_of(InverseKind kind) noexcept { return info(kind).forward; }

std::string_view name_of(InverseKind kind) noexcept { return info(kind).name; }

std::optional<InverseKind> parse_inverse_kind(std::string_view name) noexcept {
  for (const auto& k : kInverseKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

void InverseConfig::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  if (max_depth < 1 || max_depth > kMaxSignatureDepth) {
    throw DomainError("max_depth must lie in [1, 61]");
  }
}

InverseResult find5(double xt, int ss, const InverseConfig& cfg) {
  cfg.validate();
  check_seed_bit(ss);
  if (std::isnan(xt) || xt < -kClampMargin || xt > 4.0 + kClampMargin) {
    throw DomainError("find5 target " + std::to_string(xt) + " outside [0, 4]");
  }
  if (xt <= 0.0) return {DyadicRational::integer(1 - ss), true, 0, 0};
  if (xt >= 4.0) return {DyadicRational::integer(ss), true, 0, 0};

  Cursor y;
  auto s = static_cast<std::uint64_t>(ss);
  InverseResult r;
  for (;;) {
    if (std::fabs(xt - 2.0) < cfg.eps) break;
    if (r.steps == cfg.max_depth) {
      r.converged = false;
      break;
    }
    const int direction = 1 - 2 * parity(s);
    if (xt < 2.0) {
      y.step(direction);
      s = (s << 1) | 1U;
    } else {
      y.step(-direction);
      s <<= 1;
    }
    const double d = xt - 2.0;
    xt = d * d;
    ++r.steps;
  }
  r.value = y.value();
  r.squarings = r.steps;
  return r;
}

InverseResult inverse(InverseKind kind, double v, const InverseConfig& cfg) {
  if (std::isnan(v)) throw DomainError("inverse of NaN");
  double xt = 0.0;
  switch (kind) {
    case InverseKind::Acos:
    case InverseKind::Asin:
      if (v < 0.0 || v > 1.0) {
        throw DomainError(std::string(name_of(kind)) + " argument outside [0, 1]");
      }
      xt = (2.0 * v) * (2.0 * v);
      break;
    case InverseKind::Atan:
    case InverseKind::Acot:
      if (v < 0.0) {
        throw DomainError(std::string(name_of(kind)) + " argument must be >= 0");
      }
      xt = 4.0 / (v * v + 1.0);
      break;
  }
  InverseResult r = find5(xt, seed_bit_of(kind), cfg);
  r.squarings += 1;
  return r;
}

InverseResult naive_inverse(InverseKind kind, double v, const InverseConfig& cfg) {
  cfg.validate();
  if (kind != InverseKind::Acos && kind != InverseKind::Asin) {
    throw DomainError("naive_inverse supports acos and asin only");
  }
  if (std::isnan(v) || v < 0.0 || v > 1.0) {
    throw DomainError(std::string(name_of(kind)) + " argument outside [0, 1]");
  }
  const int ss = seed_bit_of(kind);
  if (v == 0.0) return {DyadicRational::integer(1 - ss), true, 0, 0};
  if (v == 1.0) return {DyadicRational::integer(ss), true, 0, 0};

  // Sine grows with the angle while cosine falls; orient comparisons to match.
  const double orient = 1.0 - 2.0 * ss;
  Cursor y;
  auto s = static_cast<std::uint64_t>(ss);
  int depth = 0;
  InverseResult r;
  for (;;) {
    const double probe = std::sqrt(radical_unwind_truncated(s, depth).value) / 2.0;
    ++r.steps;
    if (std::fabs(v - probe) < cfg.eps) break;
    if (depth == cfg.max_depth) {
      r.converged = false;
      break;
    }
    if (orient * v < orient * probe) {
      y.step(+1);
      s = (s << 1) | static_cast<std::uint64_t>(1 - parity(s));
    } else {
      y.step(-1);
      s = (s << 1) | static_cast<std::uint64_t>(parity(s));
    }
    ++depth;
  }
  r.value = y.value();
  return r;
}

}  // namespace dyadic
