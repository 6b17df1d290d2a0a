#include <benchmark/benchmark.h>

#include <gmpxx.h>

#include "sloane/conjectures.hpp"
#include "sloane/radix.hpp"

namespace {

mpz_class pow2(unsigned long e) {
  mpz_class x;
  mpz_ui_pow_ui(x.get_mpz_t(), 2, e);
  return x;
}

}  // namespace

static void BM_ToDigits(benchmark::State& state) {
  const mpz_class x = pow2(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sloane::radix::to_digits(x, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToDigits)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond)->Complexity();

static void BM_ToDigitsSchoolbook(benchmark::State& state) {
  const mpz_class x = pow2(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sloane::radix::to_digits_schoolbook(x, 3));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ToDigitsSchoolbook)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Unit(benchmark::kMicrosecond)->Complexity();

// GMP's own string conversion, for reference.
static void BM_MpzGetStr(benchmark::State& state) {
  const mpz_class x = pow2(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(x.get_str(3));
}
BENCHMARK(BM_MpzGetStr)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);

static void BM_FromDigits(benchmark::State& state) {
  const auto d = sloane::radix::to_digits(pow2(static_cast<unsigned long>(state.range(0))), 10);
  for (auto _ : state) benchmark::DoNotOptimize(sloane::radix::from_digits(d, 10));
}
BENCHMARK(BM_FromDigits)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)->Unit(benchmark::kMicrosecond);

// Ternary ones of 2^m for a window of consecutive m, the inner loop of
// chain searches.
static void BM_TernaryOnesWindow(benchmark::State& state) {
  const auto m0 = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sloane::ternary_ones_of_powers_of_two(m0, m0 + 999));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_TernaryOnesWindow)->Arg(1000)->Arg(30000)->Arg(160000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
