#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dyadic/baselines.hpp"
#include "dyadic/trig.hpp"

namespace {

std::vector<dyadic::DyadicRational> lattice(int k) {
  std::vector<dyadic::DyadicRational> xs;
  for (std::int64_t n = 1; n < (std::int64_t{1} << k); n += 2) xs.push_back(dyadic::normalize(n, k));
  return xs;
}

std::vector<double> radians(int k) {
  std::vector<double> ts;
  for (const auto& x : lattice(k)) ts.push_back(x.to_double() * std::numbers::pi / 2);
  return ts;
}

void BM_DyadicCos(benchmark::State& state) {
  const auto xs = lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& x : xs) benchmark::DoNotOptimize(dyadic::forward(dyadic::TrigKind::Cos, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}

void BM_LibmCos(benchmark::State& state) {
  const auto ts = radians(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (double t : ts) benchmark::DoNotOptimize(std::cos(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ts.size()));
}

void BM_TaylorCos(benchmark::State& state) {
  const auto ts = radians(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (double t : ts) benchmark::DoNotOptimize(dyadic::baselines::taylor_cos(t, 10));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ts.size()));
}

void BM_CordicCos(benchmark::State& state) {
  const auto ts = radians(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (double t : ts) benchmark::DoNotOptimize(dyadic::baselines::cordic_rotate(t, 52));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ts.size()));
}

void BM_DyadicAcos(benchmark::State& state) {
  std::vector<double> vs;
  for (const auto& x : lattice(static_cast<int>(state.range(0)))) {
    vs.push_back(dyadic::forward(dyadic::TrigKind::Cos, x));
  }
  for (auto _ : state) {
    for (double v : vs) benchmark::DoNotOptimize(dyadic::inverse(dyadic::InverseKind::Acos, v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vs.size()));
}

void BM_LibmAcos(benchmark::State& state) {
  std::vector<double> vs;
  for (double t : radians(static_cast<int>(state.range(0)))) vs.push_back(std::cos(t));
  for (auto _ : state) {
    for (double v : vs) benchmark::DoNotOptimize(std::acos(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vs.size()));
}

void BM_CordicAtan(benchmark::State& state) {
  std::vector<double> vs;
  for (double t : radians(static_cast<int>(state.range(0)))) vs.push_back(std::tan(t));
  for (auto _ : state) {
    for (double v : vs) benchmark::DoNotOptimize(dyadic::baselines::cordic_atan(v, 45));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(vs.size()));
}

}  // namespace

BENCHMARK(BM_DyadicCos)->DenseRange(4, 16, 4);
BENCHMARK(BM_LibmCos)->DenseRange(4, 16, 4);
BENCHMARK(BM_TaylorCos)->DenseRange(4, 16, 4);
BENCHMARK(BM_CordicCos)->DenseRange(4, 16, 4);
BENCHMARK(BM_DyadicAcos)->DenseRange(4, 16, 4);
BENCHMARK(BM_LibmAcos)->DenseRange(4, 16, 4);
BENCHMARK(BM_CordicAtan)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
