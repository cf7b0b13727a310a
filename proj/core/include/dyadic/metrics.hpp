#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dyadic/forward_trig.hpp"
#include "dyadic/inverse_trig.hpp"

namespace dyadic::metrics {

struct ErrorStats {
  double rms = 0.0;
  double mxm = 0.0;
  std::size_t count = 0;
};

/// RMS and maximum of |target - expect|. Throws DomainError on empty input.
ErrorStats error_stats(std::span<const std::pair<double, double>> pairs);

using FunctionKind = std::variant<TrigKind, InverseKind>;

std::string_view name_of(const FunctionKind& kind) noexcept;
std::optional<FunctionKind> parse_function_kind(std::string_view name) noexcept;

enum class Reference {
  /// Platform cos/sin/tan at fl(n*pi) / 2^(k+1).
  Libm,
  /// As Libm, plus a first-order correction for the rounding of the argument
  /// (pi split into two doubles). Needed near the tan/cot poles, where the
  /// argument rounding alone moves the plain reference by ~1e-9.
  LibmCorrected,
  /// Inverse of the dyadic forward value must give back the lattice point.
  Roundtrip,
};

std::string_view name_of(Reference ref) noexcept;
std::optional<Reference> parse_reference(std::string_view name) noexcept;

/// Reference value of a forward kind at the lattice point n/2^k.
double reference_value(TrigKind kind, std::int64_t n, int k, Reference ref);

struct SweepRow {
  std::string fn;
  int k = 0;
  std::int64_t n = 0;
  double value = 0.0;
  double reference = 0.0;
  double abs_err = 0.0;
  std::optional<int> depth;
  std::optional<double> ns_per_call;
};

/// Evaluates kind at every lattice point n/2^k, n = 0..2^k, skipping poles.
///
/// Forward kinds compare against Libm or LibmCorrected. Inverse kinds are
/// fed libm values (Libm/LibmCorrected) or the dyadic forward value
/// (Roundtrip), and their result is compared with n/2^k. Rows are ordered
/// by n.
///
/// depth, when given, caps the search depth of inverse kinds and truncates
/// the signature of forward kinds to its outermost `depth` levels.
/// Throws DomainError for k outside [1, 20].
std::vector<SweepRow> sweep(const FunctionKind& kind, int k, Reference ref,
                            std::optional<int> depth = std::nullopt,
                            const InverseConfig& cfg = {});

ErrorStats stats_of(std::span<const SweepRow> rows);

struct DepthPoint {
  int depth = 0;
  ErrorStats stats;
};

/// For each depth limit, runs the inverse with max_depth = depth over
/// `sample_count` random in-domain inputs and aggregates the error of the
/// returned quarter-turn value against the libm inverse. The same samples
/// are reused for every depth.
std::vector<DepthPoint> depth_sweep(InverseKind kind, std::span<const int> depths,
                                    int sample_count, std::uint64_t seed = 42,
                                    double eps = InverseConfig{}.eps);

enum class Implementation { Dyadic, Libm, Taylor, Cordic };

std::string_view name_of(Implementation impl) noexcept;
std::optional<Implementation> parse_implementation(std::string_view name) noexcept;

/// Times `impl` of kind over the lattice n/2^k: one warm-up pass, then the
/// median over `reps` passes. Single-threaded.
///
/// The row carries n = number of points, value = sum of results,
/// reference = sum of libm results and ns_per_call. Taylor supports cos
/// only; Cordic supports cos, sin and atan.
SweepRow bench(const FunctionKind& kind, int k, int reps,
               Implementation impl = Implementation::Dyadic);

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// Header fn,k,n,value,reference,abs_err[,depth][,ns_per_call]; optional
/// columns appear when any row carries them. LF line endings.
void write_csv(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace dyadic::metrics
