#include <benchmark/benchmark.h>

#include "tailsitter/controller.hpp"
#include "tailsitter/dynamics.hpp"
#include "tailsitter/harness.hpp"

using namespace tailsitter;

namespace {

RigidBodyState hover_state()
{
    RigidBodyState s;
    s.position = {0.0, 0.0, -5.0};
    s.velocity = {0.2, -0.1, 0.3};
    s.attitude = {0.01, deg2rad(93.0), 0.02};
    s.rates = {0.05, -0.02, 0.01};
    return s;
}

const ActuatorCommand kCommand{5.4, 5.2, 0.05, 0.03};

void BM_TotalWrench(benchmark::State& state)
{
    const VehicleParams p;
    const RigidBodyState s = hover_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(total_wrench(s, kCommand, p));
    }
}
BENCHMARK(BM_TotalWrench);

void BM_Rk4Step(benchmark::State& state)
{
    const VehicleParams p;
    RigidBodyState s = hover_state();
    for (auto _ : state) {
        benchmark::DoNotOptimize(step(s, kCommand, 1e-3, p));
    }
}
BENCHMARK(BM_Rk4Step);

void BM_ControllerStep(benchmark::State& state)
{
    const VehicleParams p;
    const CascadeGains gains = CascadeGains::defaults();
    const ControllerOptions opts;
    const RigidBodyState s = hover_state();
    ReferenceSample ref;
    ref.position = {0.5, -0.3, -5.2};
    LoopMemory mem;
    mem.reset(p.weight());
    for (auto _ : state) {
        benchmark::DoNotOptimize(controller_step(s, ref, mem, gains, p, opts, 5e-3));
    }
}
BENCHMARK(BM_ControllerStep);

void BM_Scenario(benchmark::State& state, const char* scenario)
{
    ScenarioConfig cfg;
    set_scenario(cfg, scenario);
    for (auto _ : state) {
        const RunResult r = run_scenario(cfg);
        benchmark::DoNotOptimize(r.metrics);
    }
}
BENCHMARK_CAPTURE(BM_Scenario, rect, "rect")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Scenario, circle, "circle")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
