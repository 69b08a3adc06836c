#include <benchmark/benchmark.h>

#include "liouq/normality.hpp"
#include "liouq/pair_square.hpp"
#include "liouq/solvers.hpp"

namespace {

using namespace liouq;

const SpfTable& table() {
  static const SpfTable t = build_spf(4'000'000);
  return t;
}

void BM_BuildSpf(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_spf(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_BuildSpf)->Arg(1 << 20)->Arg(4'000'000)->Unit(benchmark::kMillisecond);

void BM_SignedSequence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_signed_sequence({0, SignMode::kRandom}, n, table()));
  }
}
BENCHMARK(BM_SignedSequence)->Arg(1'000'000)->Arg(4'000'000)->Unit(benchmark::kMillisecond);

void BM_WordFrequencies(benchmark::State& state) {
  const auto set = a_q_set({0, SignMode::kRandom}, 1'000'000, table());
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(word_frequencies(set, 16, 1'000'000, threads));
  }
}
BENCHMARK(BM_WordFrequencies)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CorrelationSum(benchmark::State& state) {
  const auto seq = build_signed_sequence({0, SignMode::kRandom}, 4'000'000, table());
  const OffsetSpec spec({1, 2, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(correlation_sum(seq, spec, 4'000'000 - 5));
  }
}
BENCHMARK(BM_CorrelationSum)->Unit(benchmark::kMillisecond);

void BM_CountSquarePairs(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_square_pairs(n, OffsetSpec({1}), table()));
  }
}
BENCHMARK(BM_CountSquarePairs)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_SchurScan(benchmark::State& state) {
  const auto set = a_q_set({0, SignMode::kRandom}, 1'000'000, table());
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_multiplicative_schur(set, 1'000'000, threads));
  }
}
BENCHMARK(BM_SchurScan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SolveXyZ2(benchmark::State& state) {
  const auto set = a_q_set({5, SignMode::kRandom}, 1'000'000, table());
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_xy_z2(set, 1'000'000));
  }
}
BENCHMARK(BM_SolveXyZ2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
