#include <benchmark/benchmark.h>

#include <iterator>

#include "chardeg/lie_type.hpp"

namespace {

using namespace chardeg;

void BM_Sweep(benchmark::State& state) {
  SweepOptions opts;
  opts.families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  opts.rank_max = static_cast<std::uint32_t>(state.range(0));
  opts.q_max = 32;
  opts.exceptional_q_max = 8192;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(opts));
}
BENCHMARK(BM_Sweep)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_OrderE8(benchmark::State& state) {
  const GroupSpec s = GroupSpec::make(Family::E8, 0, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(order(s));
}
BENCHMARK(BM_OrderE8)->Arg(2)->Arg(1024)->Arg(8192);

}  // namespace
