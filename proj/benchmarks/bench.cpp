#include <benchmark/benchmark.h>

#include <cstdint>

#include "euler_padic/decay.hpp"
#include "euler_padic/euler_series.hpp"
#include "euler_padic/factorial.hpp"
#include "euler_padic/primes.hpp"
#include "euler_padic/scanner.hpp"

namespace {

void BM_LegendreValuation(benchmark::State& state) {
  std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_padic::legendre_valuation(n, 3));
  }
}
BENCHMARK(BM_LegendreValuation)->Arg(1000)->Arg(1000000)->Arg(1000000000);

void BM_EvaluateEuler(benchmark::State& state) {
  std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  unsigned K = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_padic::evaluate_euler(1, p, K));
  }
}
BENCHMARK(BM_EvaluateEuler)
    ->Args({2, 8})
    ->Args({2, 16})
    ->Args({101, 8})
    ->Args({101, 16})
    ->Args({4999, 8});

void BM_SievePrimes(benchmark::State& state) {
  std::uint64_t x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_padic::sieve_primes(x));
  }
}
BENCHMARK(BM_SievePrimes)->Arg(100000)->Arg(1000000)->Arg(10000000);

void BM_Theta(benchmark::State& state) {
  double x = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_padic::theta(x, 4, 1));
  }
}
BENCHMARK(BM_Theta)->Arg(100000)->Arg(1000000);

void BM_Scan(benchmark::State& state) {
  euler_padic::ScanConfig config;
  config.a = 0;
  config.b = -1;
  config.xi = 1;
  config.m = 4;
  config.classes = {1, 3};
  config.X = static_cast<std::uint64_t>(state.range(0));
  config.K = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_padic::scan(config, 1));
  }
}
BENCHMARK(BM_Scan)->Args({1000, 8})->Args({5000, 8})->Args({5000, 16});

void BM_LSequence(benchmark::State& state) {
  euler_padic::DecayConfig config;
  config.m = 4;
  config.classes = {3};
  config.xi = 1;
  config.n_samples = euler_padic::geometric_samples(
      static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_padic::l_sequence(config));
  }
}
BENCHMARK(BM_LSequence)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
