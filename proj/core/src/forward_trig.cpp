#include "dyadic/forward_trig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dyadic/errors.hpp"

namespace dyadic {
namespace {

struct KindInfo {
  TrigKind kind;
  std::string_view name;
  SigSeed seed;
};

constexpr std::array<KindInfo, 8> kKinds{{
    {TrigKind::Cos, "cos", SigSeed::Cos},
    {TrigKind::Sin, "sin", SigSeed::Sin},
    {TrigKind::Tan, "tan", SigSeed::Cos},
    {TrigKind::Cot, "cot", SigSeed::Sin},
    {TrigKind::Cos2, "cos2", SigSeed::Cos},
    {TrigKind::Sin2, "sin2", SigSeed::Sin},
    {TrigKind::Tan2, "tan2", SigSeed::Cos},
    {TrigKind::Cot2, "cot2", SigSeed::Sin},
}};

const KindInfo& info(TrigKind kind) noexcept {
  return kKinds[static_cast<std::size_t>(kind)];
}

// One level of the paired recurrence. Returns the new (w, 4 - w).
inline void unwind_level(double& w, double& c, bool negative) {
  const double r = std::sqrt(w);
  const double big = 2.0 + r;
  const double small = c / big;
  if (negative) {
    w = small;
    c = big;
  } else {
    w = big;
    c = small;
  }
  if (!(w >= 0.0 && w <= 4.0)) {
    throw std::logic_error("radicand left [0, 4] during unwind");
  }
}

bool is_unit_interval(const DyadicRational& x) {
  return x.sign() >= 0 && x <= DyadicRational::integer(1);
}

}  // namespace

SigSeed seed_of(TrigKind kind) noexcept { return info(kind).seed; }

std::string_view name_of(TrigKind kind) noexcept { return info(kind).name; }

std::optional<TrigKind> parse_trig_kind(std::string_view name) noexcept {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

RadicalValue radical_unwind(SignatureWord sig) {
  RadicalValue r{2.0, 2.0, 0};
  for (std::uint64_t s = sig.bits(); s > 3; s >>= 1) {
    unwind_level(r.value, r.complement, (s & 1U) != 0);
    ++r.steps;
  }
  return r;
}

RadicalValue radical_unwind_truncated(std::uint64_t turn_bits, int depth) {
  if (depth < 0 || depth > kMaxSignatureDepth) {
    throw DomainError("unwind depth " + std::to_string(depth) + " outside [0, 61]");
  }
  RadicalValue r{2.0, 2.0, 0};
  for (int i = 0; i < depth; ++i, turn_bits >>= 1) {
    unwind_level(r.value, r.complement, (turn_bits & 1U) != 0);
    ++r.steps;
  }
  return r;
}

double radical_unwind_plain(SignatureWord sig) {
  double a = 0.0;
  for (std::uint64_t s = sig.bits(); s > 3; s >>= 1) {
    a = (1.0 - 2.0 * static_cast<double>(s & 1U)) * std::sqrt(2.0 + a);
  }
  return 2.0 + a;
}

RadicalValue dyadic_loop(const DyadicRational& x, SigSeed seed) {
  if (!is_unit_interval(x)) {
    throw DomainError("argument " + to_string(x) + " outside [0, 1]");
  }
  const auto low = static_cast<double>(static_cast<std::uint64_t>(seed) & 1U);
  if (x.is_zero()) return {4.0 * (1.0 - low), 4.0 * low, 0};
  if (x == DyadicRational::integer(1)) return {4.0 * low, 4.0 * (1.0 - low), 0};
  return radical_unwind(build_signature(x, seed));
}

Fraction dyadic_loop_rational(const DyadicRational& x, SigSeed seed) {
  if (!is_unit_interval(x)) {
    throw DomainError("argument " + to_string(x) + " outside [0, 1]");
  }
  const std::int64_t low = static_cast<std::int64_t>(seed) & 1;
  if (x.is_zero()) return {4 * (1 - low), 1};
  if (x == DyadicRational::integer(1)) return {4 * low, 1};

  Fraction a{0, 1};
  for (std::uint64_t s = build_signature(x, seed).bits(); s > 3; s >>= 1) {
    // Approximate roots can overshoot 2 by one unit in the last place.
    const std::int64_t radicand = std::max<std::int64_t>(0, 2 * a.den + a.num);
    const Fraction r = rational_sqrt(radicand, a.den);
    a = (s & 1U) ? Fraction{-r.num, r.den} : r;
  }
  return {std::max<std::int64_t>(0, 2 * a.den + a.num), a.den};
}

namespace {

void check_pole(TrigKind kind, double v, const DyadicRational& x) {
  if (v == 0.0) {
    throw PoleError(std::string(name_of(kind)) + " has a pole at " + to_string(x));
  }
}

double forward_rational(TrigKind kind, const DyadicRational& x) {
  const Fraction v = dyadic_loop_rational(x, seed_of(kind));
  const std::int64_t rest = std::max<std::int64_t>(0, 4 * v.den - v.num);
  switch (kind) {
    case TrigKind::Cos:
    case TrigKind::Sin: {
      const Fraction r = rational_sqrt(v.num, v.den);
      return static_cast<double>(r.num) / (2.0 * static_cast<double>(r.den));
    }
    case TrigKind::Cos2:
    case TrigKind::Sin2:
      return static_cast<double>(v.num) / (4.0 * static_cast<double>(v.den));
    case TrigKind::Tan:
    case TrigKind::Cot:
      check_pole(kind, static_cast<double>(v.num), x);
      return rational_sqrt(rest, v.num).to_double();
    case TrigKind::Tan2:
    case TrigKind::Cot2:
      check_pole(kind, static_cast<double>(v.num), x);
      return static_cast<double>(rest) / static_cast<double>(v.num);
  }
  return 0.0;
}

}  // namespace

double forward(TrigKind kind, const DyadicRational& x, Arithmetic arithmetic) {
  if (arithmetic == Arithmetic::Rational) return forward_rational(kind, x);

  const RadicalValue r = dyadic_loop(x, seed_of(kind));
  switch (kind) {
    case TrigKind::Cos:
    case TrigKind::Sin:
      return std::sqrt(r.value) / 2.0;
    case TrigKind::Cos2:
    case TrigKind::Sin2:
      return r.value / 4.0;
    case TrigKind::Tan:
    case TrigKind::Cot:
      check_pole(kind, r.value, x);
      return std::sqrt(r.complement / r.value);
    case TrigKind::Tan2:
    case TrigKind::Cot2:
      check_pole(kind, r.value, x);
      return r.complement / r.value;
  }
  return 0.0;
}

double full_circle(TrigKind kind, const DyadicRational& turns) {
  if (kind != TrigKind::Cos && kind != TrigKind::Sin) {
    throw DomainError("full-circle evaluation supports cos and sin only");
  }
  const QuadratureFrame f = quadrature(turns);
  const DyadicRational arg = f.y.scaled(2);
  const double sign = kind == TrigKind::Cos ? f.inv : f.mir;
  // Adding +0.0 turns a signed zero into +0.0.
  return sign * forward(kind, arg) + 0.0;
}

}  // namespace dyadic
