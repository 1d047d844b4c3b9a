#include <benchmark/benchmark.h>

#include "chardeg/exact_arith.hpp"
#include "chardeg/interval.hpp"

namespace {

using namespace chardeg;

// Witness-shaped comparison: (n!)^13 against (H * (n - 1))^14.
void BM_CmpPower(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const Rational lhs(factorial(n));
  const Rational rhs(factorial(n) / n);
  for (auto _ : state) benchmark::DoNotOptimize(cmp_power(lhs, 13, rhs, 14));
}
BENCHMARK(BM_CmpPower)->RangeMultiplier(4)->Range(16, 4096);

void BM_NthRootFloor(benchmark::State& state) {
  const Natural x = factorial(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nth_root_floor(x, 14));
}
BENCHMARK(BM_NthRootFloor)->RangeMultiplier(4)->Range(16, 4096);

void BM_CyclotomicUncached(benchmark::State& state) {
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cyclotomic_uncached(k));
}
BENCHMARK(BM_CyclotomicUncached)->Arg(105)->Arg(210)->Arg(1155);

void BM_PiInterval(benchmark::State& state) {
  const auto digits = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(const_interval(Constant::pi, digits));
}
BENCHMARK(BM_PiInterval)->Arg(50)->Arg(100)->Arg(400);

}  // namespace
