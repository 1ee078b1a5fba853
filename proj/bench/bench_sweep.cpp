#include <benchmark/benchmark.h>

#include "beepid/identify.hpp"
#include "beepid/montecarlo.hpp"

using namespace beepid;

namespace {

SimConfig bench_config() {
  SimConfig cfg;
  cfg.runs = 10;
  cfg.interference_rate = {0.0, 0.2};
  return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
  const SimConfig cfg = bench_config();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(cfg));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const SimConfig cfg = bench_config();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(cfg, threads));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Identify(benchmark::State& state) {
  const auto slots = static_cast<std::size_t>(state.range(0));
  std::vector<DeviceId> roster;
  ChannelTrace trace(slots);
  for (std::uint64_t i = 0; i < 10; ++i) {
    roster.push_back(DeviceId{0x1000 + i});
    if (i < 5) trace |= generate_pattern(roster.back(), 0.3, slots).slots();
  }
  for (auto _ : state) benchmark::DoNotOptimize(identify(trace, roster, 0.3, slots));
}
BENCHMARK(BM_Identify)->Arg(5)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
