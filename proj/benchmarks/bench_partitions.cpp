#include <benchmark/benchmark.h>

#include "chardeg/alt_verifier.hpp"
#include "chardeg/partitions.hpp"

namespace {

using namespace chardeg;

void BM_HookProductRectangle(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  const Partition square = Partition::rectangle(m, m);
  for (auto _ : state) benchmark::DoNotOptimize(hook_product(square));
}
BENCHMARK(BM_HookProductRectangle)->RangeMultiplier(2)->Range(4, 64);

void BM_EnumeratePartitions(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_partition(n, [&count](const Partition&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);

void BM_CertifyAlternating(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_alternating(n));
}
BENCHMARK(BM_CertifyAlternating)->Arg(49)->Arg(200)->Arg(1000)->Arg(2000);

void BM_CertifyAlternatingRange(benchmark::State& state) {
  const auto workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_alternating_range(7, 400, {}, workers));
  }
}
BENCHMARK(BM_CertifyAlternatingRange)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
