#include <benchmark/benchmark.h>

#include <random>

#include "effrand/bounds.hpp"
#include "effrand/generators.hpp"
#include "effrand/open_set.hpp"
#include "effrand/solovay.hpp"
#include "effrand/stat_tests.hpp"

namespace {

using namespace effrand;

void BM_Minimize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<BitString> cyl;
  for (int i = 0; i < state.range(0); ++i) {
    std::vector<std::uint8_t> v(1 + rng() % 16);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng() & 1U);
    cyl.emplace_back(std::move(v));
  }
  const OpenSet set(std::move(cyl));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(set));
}
BENCHMARK(BM_Minimize)->Range(64, 8192);

void BM_ExactBinomialTail(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_binomial_tail(n, 2.0));
}
BENCHMARK(BM_ExactBinomialTail)->Range(64, 65536);

void BM_CoverSchedule(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cover_schedule(8, 40));
}
BENCHMARK(BM_CoverSchedule);

void BM_SllnScan(benchmark::State& state) {
  const BitSequence bits = gen_prng(7, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(slln_scan(bits, 8, 223));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SllnScan)->Range(1 << 12, 1 << 20);

void BM_NormalityScan(benchmark::State& state) {
  const BitSequence bits = gen_champernowne(1 << 17);
  for (auto _ : state) benchmark::DoNotOptimize(normality_scan(bits, static_cast<std::uint64_t>(state.range(0)), Rational(1, 20)));
}
BENCHMARK(BM_NormalityScan)->DenseRange(1, 8, 1);

void BM_LilUpperScan(benchmark::State& state) {
  const PrefixSums sums = prefix_sums(gen_prng(3, 1 << 20));
  for (auto _ : state) benchmark::DoNotOptimize(lil_upper_scan(sums, Rational(3, 2), Rational(5, 4)));
}
BENCHMARK(BM_LilUpperScan);

void BM_SllnRuleMeasure(benchmark::State& state) {
  const SllnRule rule{4, 40, static_cast<std::uint64_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(slln_rule_measure(rule));
}
BENCHMARK(BM_SllnRuleMeasure)->Range(64, 1024);

void BM_GenPrng(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gen_prng(1, static_cast<std::uint64_t>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenPrng)->Range(1 << 12, 1 << 20);

}  // namespace
BENCHMARK_MAIN();
