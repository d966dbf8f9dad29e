#include <benchmark/benchmark.h>

#include "vecalloc/allocator.hpp"
#include "vecalloc/queue_sim.hpp"
#include "vecalloc/scenarios.hpp"

namespace {

using namespace vecalloc;

void BM_SolveBnb(benchmark::State& state, ScenarioId id) {
  const Architecture arch = default_architecture();
  const TaskSet tasks = scaled_taskset(static_cast<double>(state.range(0)));
  const Weights w = calibrate(arch, tasks, id);
  for (auto _ : state) benchmark::DoNotOptimize(solve_bnb(arch, tasks, w));
}
BENCHMARK_CAPTURE(BM_SolveBnb, power_prop, ScenarioId::kPowerProp)->Arg(100)->Arg(550)->Arg(1000);
BENCHMARK_CAPTURE(BM_SolveBnb, power_prop_queue, ScenarioId::kPowerPropQueue)
    ->Arg(100)
    ->Arg(550)
    ->Arg(1000);

void BM_Evaluate(benchmark::State& state) {
  const Architecture arch = default_architecture();
  const TaskSet tasks = scaled_taskset(550);
  const Weights w = calibrate(arch, tasks, ScenarioId::kPowerPropQueue);
  const Allocation alloc = solve_bnb(arch, tasks, w).best;
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(arch, tasks, alloc, w));
}
BENCHMARK(BM_Evaluate);

void BM_Sweep(benchmark::State& state) {
  const Architecture arch = default_architecture();
  const auto points = default_traffic_points();
  SweepOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweeps(arch, kAllScenarios, points, o));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SimulateMm1(benchmark::State& state) {
  SimConfig cfg;
  cfg.mu = 10e9 / 12000;
  cfg.lambda = 0.5 * cfg.mu;
  cfg.measured = 100000;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_mm1(cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.measured));
}
BENCHMARK(BM_SimulateMm1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
