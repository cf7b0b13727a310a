#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/metrics.hpp"
#include "dyadic/trig.hpp"

namespace dyadic::cli {
namespace {

// Bad flag values that CLI11 cannot see (unknown function names, etc.).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_double(const std::string& text, std::string_view flag) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw UsageError(std::string(flag) + ": '" + text + "' is not a number");
  }
  return v;
}

metrics::FunctionKind function_kind(const std::string& name) {
  if (auto k = metrics::parse_function_kind(name)) return *k;
  throw UsageError("--fn: unknown function '" + name + "'");
}

TrigKind forward_kind(const std::string& name) {
  const auto k = function_kind(name);
  if (const auto* t = std::get_if<TrigKind>(&k)) return *t;
  throw UsageError("--fn: '" + name + "' is not a forward function");
}

InverseKind inverse_kind(const std::string& name) {
  const auto k = function_kind(name);
  if (const auto* i = std::get_if<InverseKind>(&k)) return *i;
  throw UsageError("--fn: '" + name + "' is not an inverse function");
}

std::string signs_of(SignatureWord sig) {
  std::string s = "(";
  for (int i = 1; i <= sig.depth(); ++i) {
    if (i > 1) s += ',';
    s += sig.level_sign(i) > 0 ? '+' : '-';
  }
  return s + ")";
}

struct Options {
  std::string fn;
  std::string x;
  std::string v;
  std::string eps = "1e-10";
  std::string ref = "libm";
  std::string impl = "dyadic";
  std::optional<int> k;
  std::optional<int> depth;
  int reps = 5;
  int samples = 1000;
  bool turns = false;
  bool csv = false;
};

InverseConfig inverse_config(const Options& o) {
  InverseConfig cfg;
  cfg.eps = parse_double(o.eps, "--eps");
  if (o.depth) cfg.max_depth = *o.depth;
  cfg.validate();
  return cfg;
}

void run_eval(const Options& o, std::ostream& out) {
  const TrigKind kind = forward_kind(o.fn);
  const DyadicRational x = parse_dyadic(o.x);
  const double value = o.turns ? full_circle(kind, x) : forward(kind, x);
  out << metrics::format_double(value) << '\n';
}

void run_inv(const Options& o, std::ostream& out) {
  const InverseKind kind = inverse_kind(o.fn);
  const double v = parse_double(o.v, "--v");
  const InverseResult r = inverse(kind, v, inverse_config(o));
  out << to_string(r.value) << ' ' << (r.converged ? "converged" : "unconverged") << '\n';
}

void run_sweep(const Options& o, std::ostream& out) {
  const auto kind = function_kind(o.fn);
  if (!o.k) {
    // Depth sweep over random samples: --depth D runs depths 1..D.
    const auto* inv = std::get_if<InverseKind>(&kind);
    if (!inv || !o.depth) throw UsageError("sweep needs --k, or --depth with an inverse --fn");
    if (*o.depth < 1 || *o.depth > kMaxSignatureDepth) {
      throw DomainError("--depth must lie in [1, 61]");
    }
    std::vector<int> depths(static_cast<std::size_t>(*o.depth));
    std::iota(depths.begin(), depths.end(), 1);
    const auto points =
        metrics::depth_sweep(*inv, depths, o.samples, 42, parse_double(o.eps, "--eps"));
    out << (o.csv ? "fn,depth,rms,mxm,count\n" : "fn     depth  rms                      mxm\n");
    for (const auto& p : points) {
      if (o.csv) {
        out << o.fn << ',' << p.depth << ',' << metrics::format_double(p.stats.rms) << ','
            << metrics::format_double(p.stats.mxm) << ',' << p.stats.count << '\n';
      } else {
        out << std::left << std::setw(7) << o.fn << std::setw(7) << p.depth << std::setw(25)
            << metrics::format_double(p.stats.rms) << metrics::format_double(p.stats.mxm)
            << '\n';
      }
    }
    return;
  }

  const auto ref = metrics::parse_reference(o.ref);
  if (!ref) throw UsageError("--ref: unknown reference '" + o.ref + "'");
  InverseConfig cfg;
  cfg.eps = parse_double(o.eps, "--eps");
  const auto rows = metrics::sweep(kind, *o.k, *ref, o.depth, cfg);
  if (o.csv) {
    metrics::write_csv(out, rows);
    return;
  }
  const auto stats = metrics::stats_of(rows);
  out << "fn " << o.fn << "  k " << *o.k << "  ref " << o.ref << "  points " << stats.count
      << "\nrms " << metrics::format_double(stats.rms) << "\nmxm "
      << metrics::format_double(stats.mxm) << '\n';
}

void run_bench(const Options& o, std::ostream& out) {
  const auto kind = function_kind(o.fn);
  const auto impl = metrics::parse_implementation(o.impl);
  if (!impl) throw UsageError("--impl: unknown implementation '" + o.impl + "'");
  if (!o.k) throw UsageError("bench needs --k");
  const metrics::SweepRow row = metrics::bench(kind, *o.k, o.reps, *impl);
  if (o.csv) {
    metrics::write_csv(out, std::span<const metrics::SweepRow>(&row, 1));
    return;
  }
  out << row.fn << "  k " << row.k << "  points " << row.n << "  ns/call "
      << metrics::format_double(*row.ns_per_call) << '\n';
}

}  // namespace

void write_table(std::ostream& out, int k, bool csv) {
  if (k < 1 || k > 20) throw DomainError("--k must lie in [1, 20]");
  struct Row {
    std::string fraction, sig, primed, signs;
  };
  std::vector<Row> rows;
  const std::int64_t m = std::int64_t{1} << k;
  for (std::int64_t n = 1; n < m; ++n) {
    const DyadicRational x = normalize(n, k);
    const SignatureWord sig = build_signature(x, SigSeed::Cos);
    rows.push_back({to_string(x), std::to_string(unprimed_bits(sig, SigSeed::Cos)),
                    std::to_string(sig.bits()), signs_of(sig)});
  }

  if (csv) {
    out << "fraction,sig,sig_primed,signs\n";
    for (const auto& r : rows) {
      out << r.fraction << ',' << r.sig << ',' << r.primed << ",\"" << r.signs << "\"\n";
    }
    return;
  }

  const Row header{"n/m", "sig", "sig'", "signs"};
  std::size_t w0 = header.fraction.size(), w1 = header.sig.size(), w2 = header.primed.size();
  for (const auto& r : rows) {
    w0 = std::max(w0, r.fraction.size());
    w1 = std::max(w1, r.sig.size());
    w2 = std::max(w2, r.primed.size());
  }
  auto line = [&](const Row& r) {
    out << std::left << std::setw(static_cast<int>(w0 + 2)) << r.fraction
        << std::setw(static_cast<int>(w1 + 2)) << r.sig << std::setw(static_cast<int>(w2 + 2))
        << r.primed << r.signs << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Table-free trigonometry on dyadic rationals", "dyadic-trig"};
  app.require_subcommand(1, 1);
  Options o;

  const std::string fn_help =
      "function: cos sin tan cot cos2 sin2 tan2 cot2 acos asin atan acot";

  auto* eval = app.add_subcommand("eval", "evaluate a forward function at x*pi/2");
  eval->add_option("--fn", o.fn, fn_help)->required();
  eval->add_option("--x", o.x, "dyadic argument n/2^k (quarter turns, or turns with --turns)")
      ->required();
  eval->add_flag("--turns", o.turns, "treat --x as full turns (cos and sin only)");

  auto* inv = app.add_subcommand("inv", "evaluate an inverse function, printing a dyadic");
  inv->add_option("--fn", o.fn, fn_help)->required();
  inv->add_option("--v", o.v, "function value")->required();
  inv->add_option("--eps", o.eps, "termination tolerance (default 1e-10)");
  inv->add_option("--depth", o.depth, "maximum search depth (default 48)");

  auto* table = app.add_subcommand("table", "print the signature table for denominator 2^k");
  o.k = 4;
  table->add_option("--k", o.k, "denominator exponent (default 4)");
  table->add_flag("--csv", o.csv, "emit CSV");

  auto* sweep = app.add_subcommand("sweep", "lattice accuracy sweep or inverse depth sweep");
  sweep->add_option("--fn", o.fn, fn_help)->required();
  sweep->add_option("--k", o.k, "lattice exponent");
  sweep->add_option("--ref", o.ref, "reference: libm, libm-corrected, roundtrip");
  sweep->add_option("--depth", o.depth, "depth limit");
  sweep->add_option("--eps", o.eps, "inverse termination tolerance");
  sweep->add_option("--samples", o.samples, "random samples per depth (depth sweep)");
  sweep->add_flag("--csv", o.csv, "emit CSV rows");

  auto* bench = app.add_subcommand("bench", "time an implementation over the lattice");
  bench->add_option("--fn", o.fn, fn_help)->required();
  bench->add_option("--k", o.k, "lattice exponent")->required();
  bench->add_option("--reps", o.reps, "timed repetitions (default 5)");
  bench->add_option("--impl", o.impl, "dyadic, libm, taylor, cordic");
  bench->add_flag("--csv", o.csv, "emit CSV");

  // Only table has a default k; the others must see it unset.
  sweep->preparse_callback([&o](std::size_t) { o.k.reset(); });
  bench->preparse_callback([&o](std::size_t) { o.k.reset(); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*eval) run_eval(o, out);
    if (*inv) run_inv(o, out);
    if (*table) write_table(out, *o.k, o.csv);
    if (*sweep) run_sweep(o, out);
    if (*bench) run_bench(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const dyadic::Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace dyadic::cli
