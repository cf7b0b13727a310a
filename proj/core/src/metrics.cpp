#include "dyadic/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

#include "dyadic/baselines.hpp"
#include "dyadic/errors.hpp"

namespace dyadic::metrics {
namespace {

constexpr double kPi = std::numbers::pi;
// pi - fl(pi)
constexpr double kPiLow = 1.2246467991473532e-16;

constexpr int kMinSweepK = 1;
constexpr int kMaxSweepK = 20;

void check_k(int k) {
  if (k < kMinSweepK || k > kMaxSweepK) {
    throw DomainError("sweep k " + std::to_string(k) + " outside [1, 20]");
  }
}

bool is_pole(TrigKind kind, std::int64_t n, int k) {
  switch (kind) {
    case TrigKind::Tan:
    case TrigKind::Tan2:
      return n == (std::int64_t{1} << k);
    case TrigKind::Cot:
    case TrigKind::Cot2:
      return n == 0;
    default:
      return false;
  }
}

bool is_pole(InverseKind kind, std::int64_t n, int k) {
  return is_pole(forward_of(kind), n, k);
}

// f(theta) and f'(theta) for the forward kinds, from libm.
std::pair<double, double> libm_with_derivative(TrigKind kind, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  switch (kind) {
    case TrigKind::Cos:
      return {c, -s};
    case TrigKind::Sin:
      return {s, c};
    case TrigKind::Tan: {
      const double t = std::tan(theta);
      return {t, 1.0 + t * t};
    }
    case TrigKind::Cot: {
      const double t = c / s;
      return {t, -(1.0 + t * t)};
    }
    case TrigKind::Cos2:
      return {c * c, -2.0 * s * c};
    case TrigKind::Sin2:
      return {s * s, 2.0 * s * c};
    case TrigKind::Tan2: {
      const double t = std::tan(theta);
      return {t * t, 2.0 * t * (1.0 + t * t)};
    }
    case TrigKind::Cot2: {
      const double t = c / s;
      return {t * t, -2.0 * t * (1.0 + t * t)};
    }
  }
  return {0.0, 0.0};
}

double libm_inverse_quarter_turns(InverseKind kind, double v) {
  double radians = 0.0;
  switch (kind) {
    case InverseKind::Acos:
      radians = std::acos(v);
      break;
    case InverseKind::Asin:
      radians = std::asin(v);
      break;
    case InverseKind::Atan:
      radians = std::atan(v);
      break;
    case InverseKind::Acot:
      radians = kPi / 2.0 - std::atan(v);
      break;
  }
  return radians / (kPi / 2.0);
}

// Keeps only the outermost `levels` turn bits of a signature word.
SignatureWord truncate_word(SignatureWord sig, int levels) {
  const int drop = std::max(0, sig.depth() - levels);
  return SignatureWord(sig.bits() >> drop);
}

double forward_truncated(TrigKind kind, const DyadicRational& x, int levels) {
  if (x.is_zero() || x == DyadicRational::integer(1)) return forward(kind, x);
  const RadicalValue r = radical_unwind(truncate_word(build_signature(x, seed_of(kind)), levels));
  switch (kind) {
    case TrigKind::Cos:
    case TrigKind::Sin:
      return std::sqrt(r.value) / 2.0;
    case TrigKind::Cos2:
    case TrigKind::Sin2:
      return r.value / 4.0;
    case TrigKind::Tan:
    case TrigKind::Cot:
      return std::sqrt(r.complement / r.value);
    case TrigKind::Tan2:
    case TrigKind::Cot2:
      return r.complement / r.value;
  }
  return 0.0;
}

std::vector<SweepRow> sweep_forward(TrigKind kind, int k, Reference ref,
                                    std::optional<int> depth) {
  if (ref == Reference::Roundtrip) {
    throw DomainError("roundtrip reference applies to inverse functions");
  }
  std::vector<SweepRow> rows;
  const std::int64_t count = std::int64_t{1} << k;
  rows.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t n = 0; n <= count; ++n) {
    if (is_pole(kind, n, k)) continue;
    const DyadicRational x = normalize(n, k);
    SweepRow row;
    row.fn = std::string(name_of(kind));
    row.k = k;
    row.n = n;
    row.value = depth ? forward_truncated(kind, x, *depth) : forward(kind, x);
    row.reference = reference_value(kind, n, k, ref);
    row.abs_err = std::fabs(row.value - row.reference);
    row.depth = depth;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> sweep_inverse(InverseKind kind, int k, Reference ref,
                                    std::optional<int> depth, InverseConfig cfg) {
  if (depth) cfg.max_depth = *depth;
  cfg.validate();
  const TrigKind fwd = forward_of(kind);
  std::vector<SweepRow> rows;
  const std::int64_t count = std::int64_t{1} << k;
  rows.reserve(static_cast<std::size_t>(count) + 1);
  for (std::int64_t n = 0; n <= count; ++n) {
    if (is_pole(kind, n, k)) continue;
    const DyadicRational x = normalize(n, k);
    const double v = ref == Reference::Roundtrip ? forward(fwd, x)
                                                 : reference_value(fwd, n, k, ref);
    SweepRow row;
    row.fn = std::string(name_of(kind));
    row.k = k;
    row.n = n;
    row.value = inverse(kind, v, cfg).value.to_double();
    row.reference = x.to_double();
    row.abs_err = std::fabs(row.value - row.reference);
    row.depth = depth;
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename F>
double time_pass_ns(F&& body, std::size_t calls) {
  const auto t0 = std::chrono::steady_clock::now();
  body();
  const auto t1 = std::chrono::steady_clock::now();
  const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
  return ns / static_cast<double>(std::max<std::size_t>(calls, 1));
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

ErrorStats error_stats(std::span<const std::pair<double, double>> pairs) {
  if (pairs.empty()) throw DomainError("error_stats of an empty list");
  double sum_sq = 0.0;
  double mxm = 0.0;
  for (const auto& [target, expect] : pairs) {
    const double d = std::fabs(target - expect);
    sum_sq += d * d;
    mxm = std::max(mxm, d);
  }
  const double rms = std::sqrt(sum_sq / static_cast<double>(pairs.size()));
  // The mean of squares cannot exceed the largest square; rounding can.
  return {std::min(rms, mxm), mxm, pairs.size()};
}

std::string_view name_of(const FunctionKind& kind) noexcept {
  return std::visit([](auto k) { return dyadic::name_of(k); }, kind);
}

std::optional<FunctionKind> parse_function_kind(std::string_view name) noexcept {
  if (auto t = parse_trig_kind(name)) return FunctionKind{*t};
  if (auto i = parse_inverse_kind(name)) return FunctionKind{*i};
  return std::nullopt;
}

std::string_view name_of(Reference ref) noexcept {
  switch (ref) {
    case Reference::Libm:
      return "libm";
    case Reference::LibmCorrected:
      return "libm-corrected";
    case Reference::Roundtrip:
      return "roundtrip";
  }
  return "";
}

std::optional<Reference> parse_reference(std::string_view name) noexcept {
  for (auto r : {Reference::Libm, Reference::LibmCorrected, Reference::Roundtrip}) {
    if (name_of(r) == name) return r;
  }
  return std::nullopt;
}

double reference_value(TrigKind kind, std::int64_t n, int k, Reference ref) {
  const auto nd = static_cast<double>(n);
  const double p = nd * kPi;
  const double theta = std::ldexp(p, -(k + 1));
  const auto [f, df] = libm_with_derivative(kind, theta);
  if (ref != Reference::LibmCorrected) return f;
  // Exact residual of n * fl(pi), plus n * (pi - fl(pi)).
  const double residual = std::fma(nd, kPi, -p) + nd * kPiLow;
  return f + std::ldexp(residual, -(k + 1)) * df;
}

std::vector<SweepRow> sweep(const FunctionKind& kind, int k, Reference ref,
                            std::optional<int> depth, const InverseConfig& cfg) {
  check_k(k);
  if (depth && (*depth < 1 || *depth > kMaxSignatureDepth)) {
    throw DomainError("depth must lie in [1, 61]");
  }
  if (const auto* t = std::get_if<TrigKind>(&kind)) return sweep_forward(*t, k, ref, depth);
  return sweep_inverse(std::get<InverseKind>(kind), k, ref, depth, cfg);
}

ErrorStats stats_of(std::span<const SweepRow> rows) {
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(rows.size());
  for (const auto& r : rows) pairs.emplace_back(r.value, r.reference);
  return error_stats(pairs);
}

std::vector<DepthPoint> depth_sweep(InverseKind kind, std::span<const int> depths,
                                    int sample_count, std::uint64_t seed, double eps) {
  if (sample_count < 1) throw DomainError("depth_sweep needs at least one sample");
  for (int d : depths) {
    if (d < 1 || d > kMaxSignatureDepth) throw DomainError("depth must lie in [1, 61]");
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const TrigKind fwd = forward_of(kind);
  std::vector<std::pair<double, double>> samples;  // (input, reference angle)
  samples.reserve(static_cast<std::size_t>(sample_count));
  while (samples.size() < static_cast<std::size_t>(sample_count)) {
    const double t = unit(rng);
    if (t <= 0.0 || t >= 1.0) continue;
    const double theta = t * kPi / 2.0;
    double v = 0.0;
    switch (fwd) {
      case TrigKind::Cos:
        v = std::cos(theta);
        break;
      case TrigKind::Sin:
        v = std::sin(theta);
        break;
      case TrigKind::Tan:
        v = std::tan(theta);
        break;
      default:
        v = 1.0 / std::tan(theta);
        break;
    }
    samples.emplace_back(v, libm_inverse_quarter_turns(kind, v));
  }

  std::vector<DepthPoint> out;
  out.reserve(depths.size());
  std::vector<std::pair<double, double>> pairs(samples.size());
  for (int d : depths) {
    const InverseConfig cfg{eps, d};
    for (std::size_t i = 0; i < samples.size(); ++i) {
      pairs[i] = {inverse(kind, samples[i].first, cfg).value.to_double(), samples[i].second};
    }
    out.push_back({d, error_stats(pairs)});
  }
  return out;
}

std::string_view name_of(Implementation impl) noexcept {
  switch (impl) {
    case Implementation::Dyadic:
      return "dyadic";
    case Implementation::Libm:
      return "libm";
    case Implementation::Taylor:
      return "taylor";
    case Implementation::Cordic:
      return "cordic";
  }
  return "";
}

std::optional<Implementation> parse_implementation(std::string_view name) noexcept {
  for (auto i : {Implementation::Dyadic, Implementation::Libm, Implementation::Taylor,
                 Implementation::Cordic}) {
    if (name_of(i) == name) return i;
  }
  return std::nullopt;
}

SweepRow bench(const FunctionKind& kind, int k, int reps, Implementation impl) {
  check_k(k);
  if (reps < 1) throw DomainError("bench needs reps >= 1");

  const auto* trig = std::get_if<TrigKind>(&kind);
  const auto* inv = std::get_if<InverseKind>(&kind);
  const TrigKind fwd = trig ? *trig : forward_of(*inv);

  // Inputs: lattice points for forward kinds, libm values for inverse kinds.
  std::vector<DyadicRational> points;
  std::vector<double> thetas;
  std::vector<double> values;
  double reference_sum = 0.0;
  const std::int64_t count = std::int64_t{1} << k;
  for (std::int64_t n = 0; n <= count; ++n) {
    if (is_pole(fwd, n, k)) continue;
    points.push_back(normalize(n, k));
    thetas.push_back(std::ldexp(static_cast<double>(n) * kPi, -(k + 1)));
    const double f = reference_value(fwd, n, k, Reference::Libm);
    values.push_back(f);
    reference_sum += trig ? f : libm_inverse_quarter_turns(*inv, f);
  }

  const bool supported = [&] {
    switch (impl) {
      case Implementation::Dyadic:
        return true;
      case Implementation::Libm:
        return !trig || *trig == TrigKind::Cos || *trig == TrigKind::Sin ||
               *trig == TrigKind::Tan;
      case Implementation::Taylor:
        return trig && *trig == TrigKind::Cos;
      case Implementation::Cordic:
        return (trig && (*trig == TrigKind::Cos || *trig == TrigKind::Sin)) ||
               (inv && *inv == InverseKind::Atan);
    }
    return false;
  }();
  if (!supported) {
    throw DomainError(std::string(name_of(impl)) + " has no implementation of " +
                      std::string(name_of(kind)));
  }

  volatile double sink = 0.0;
  double checksum = 0.0;
  auto pass = [&] {
    double acc = 0.0;
    const std::size_t m = points.size();
    switch (impl) {
      case Implementation::Dyadic:
        if (trig) {
          for (std::size_t i = 0; i < m; ++i) acc += forward(*trig, points[i]);
        } else {
          for (std::size_t i = 0; i < m; ++i) acc += inverse(*inv, values[i]).value.to_double();
        }
        break;
      case Implementation::Libm:
        if (trig) {
          for (std::size_t i = 0; i < m; ++i) {
            const double th = thetas[i];
            acc += *trig == TrigKind::Cos ? std::cos(th)
                   : *trig == TrigKind::Sin ? std::sin(th)
                                            : std::tan(th);
          }
        } else {
          for (std::size_t i = 0; i < m; ++i) acc += libm_inverse_quarter_turns(*inv, values[i]);
        }
        break;
      case Implementation::Taylor:
        for (std::size_t i = 0; i < m; ++i) acc += baselines::taylor_cos(thetas[i], 10);
        break;
      case Implementation::Cordic:
        if (trig) {
          for (std::size_t i = 0; i < m; ++i) {
            const auto [c, s] = baselines::cordic_rotate(thetas[i], 52);
            acc += *trig == TrigKind::Cos ? c : s;
          }
        } else {
          for (std::size_t i = 0; i < m; ++i) {
            acc += baselines::cordic_atan(values[i], 45) / (kPi / 2.0);
          }
        }
        break;
    }
    checksum = acc;
    sink = sink + acc;
  };

  pass();  // warm-up
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(reps));
  for (int r = 0; r < reps; ++r) samples.push_back(time_pass_ns(pass, points.size()));

  SweepRow row;
  row.fn = std::string(name_of(kind));
  if (impl != Implementation::Dyadic) row.fn += "@" + std::string(name_of(impl));
  row.k = k;
  row.n = static_cast<std::int64_t>(points.size());
  row.value = checksum;
  row.reference = reference_sum;
  row.abs_err = std::fabs(checksum - reference_sum);
  row.ns_per_call = median(std::move(samples));
  return row;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, std::span<const SweepRow> rows) {
  const bool with_depth =
      std::any_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.depth.has_value(); });
  const bool with_ns = std::any_of(rows.begin(), rows.end(),
                                   [](const SweepRow& r) { return r.ns_per_call.has_value(); });
  os << "fn,k,n,value,reference,abs_err";
  if (with_depth) os << ",depth";
  if (with_ns) os << ",ns_per_call";
  os << '\n';
  for (const auto& r : rows) {
    os << r.fn << ',' << r.k << ',' << r.n << ',' << format_double(r.value) << ','
       << format_double(r.reference) << ',' << format_double(r.abs_err);
    if (with_depth) {
      os << ',';
      if (r.depth) os << *r.depth;
    }
    if (with_ns) {
      os << ',';
      if (r.ns_per_call) os << format_double(*r.ns_per_call);
    }
    os << '\n';
  }
}

}  // namespace dyadic::metrics
