#pragma once

#include <optional>
#include <string_view>

#include "dyadic/dyadic_rational.hpp"
#include "dyadic/forward_trig.hpp"

namespace dyadic {

/// Inverse functions; results are quarter-turn dyadics t (angle t*pi/2).
enum class InverseKind { Acos, Asin, Atan, Acot };

/// Low bit of the search seed: 0 for acos/atan, 1 for asin/acot.
int seed_bit_of(InverseKind kind) noexcept;
/// The forward function this kind undoes (Cos, Sin, Tan, Cot).
TrigKind forward_of(InverseKind kind) noexcept;
std::string_view name_of(InverseKind kind) noexcept;
std::optional<InverseKind> parse_inverse_kind(std::string_view name) noexcept;

struct InverseConfig {
  /// Search stops once the remainder is within eps of 2.
  double eps = 1e-10;
  /// Maximum number of refinements (squarings) after the initial 1/2 guess.
  int max_depth = 48;

  /// Throws DomainError unless 0 < eps < 1 and 1 <= max_depth <= 61.
  void validate() const;
};

struct InverseResult {
  DyadicRational value;
  /// False when max_depth ran out before the remainder settled on 2.
  bool converged = true;
  /// Refinements performed by the search loop; each squares the remainder.
  int steps = 0;
  /// All squarings, including the one in the input transform.
  int squarings = 0;
};

/// Fused inverse on the transformed target xt in [0, 4].
///
/// Runs the forward unwind backwards: each pass compares the remainder with
/// 2 to recover one turn bit, moves y by half the previous step in the
/// direction given by the parity of the turns so far, and replaces the
/// remainder by (xt - 2)^2. ss is 0 for the cosine family, 1 for sine.
/// Inputs within 4 ulp(4) outside [0, 4] are clamped; anything further out
/// (or NaN) raises DomainError.
InverseResult find5(double xt, int ss, const InverseConfig& cfg = {});

/// acos/asin take v in [0, 1] and search on (2v)^2; atan/acot take v >= 0
/// and search on 4 / (v^2 + 1). Throws DomainError outside those domains.
InverseResult inverse(InverseKind kind, double v, const InverseConfig& cfg = {});

/// Plain bisection for acos/asin that probes the forward function at every
/// level (quadratic total work). Intended as a cross-check for find5.
/// steps counts probes.
InverseResult naive_inverse(InverseKind kind, double v, const InverseConfig& cfg = {});

}  // namespace dyadic
