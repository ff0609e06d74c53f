#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "stab/cli.hpp"
#include "stab/dfinite.hpp"
#include "stab/integrate.hpp"

using namespace stab;

namespace {

const RatFunc X = RatFunc::x();

void BM_SkolemParallel(benchmark::State& state) {
  const int max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skolem_scan(1, X * X, max));
}

void BM_SkolemSerial(benchmark::State& state) {
  const int max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(skolem_scan_serial(1, X * X, max));
}

NamedSeries certificate_input() {
  const auto b = eventual_stability_bound(named_series("geom", 0).rec);
  return named_series("geom", default_truncation(b));
}

void BM_CertificateParallel(benchmark::State& state) {
  const auto ns = certificate_input();
  for (auto _ : state) benchmark::DoNotOptimize(eventual_stability_certificate(ns.series, ns.rec, 6, 3));
}

void BM_CertificateSerial(benchmark::State& state) {
  const auto ns = certificate_input();
  for (auto _ : state) benchmark::DoNotOptimize(eventual_stability_certificate_serial(ns.series, ns.rec, 6, 3));
}

std::vector<std::string> batch_lines(int n) {
  std::vector<std::string> lines;
  for (int i = 0; i < n; ++i) {
    switch (i % 4) {
      case 0: lines.push_back("x^" + std::to_string(i % 7) + "*log(x)^3"); break;
      case 1: lines.push_back("(x^3 - " + std::to_string(i) + ")*exp(2*x)"); break;
      case 2: lines.push_back("(2*x + 1)/(x^3 - " + std::to_string(i % 5 + 2) + ")^2"); break;
      default: lines.push_back("exp(x^2)*x"); break;
    }
  }
  return lines;
}

void BM_BatchParallel(benchmark::State& state) {
  const auto lines = batch_lines(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_batch(lines, "ddx", "elementary", 10));
}

void BM_BatchSerial(benchmark::State& state) {
  const auto lines = batch_lines(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_batch_serial(lines, "ddx", "elementary", 10));
}

}  // namespace

BENCHMARK(BM_SkolemParallel)->Arg(12)->Arg(40);
BENCHMARK(BM_SkolemSerial)->Arg(12)->Arg(40);
BENCHMARK(BM_CertificateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertificateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
