// Serial reference vs OpenMP power-map kernel on the reference scene.

#include <benchmark/benchmark.h>

#include "risray/config.hpp"
#include "risray/propagation.hpp"

using namespace risray;

namespace {

struct Fixture {
    ScenarioConfig cfg = default_config();
    std::vector<Wall> walls;
    Fixture() {
        walls = cfg.scene.walls;
        walls.push_back(baseline_wall(cfg.scene.ris));
    }
};

void bench_serial(benchmark::State& state) {
    Fixture f;
    const double res = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        PowerMap map = power_map_serial(f.cfg.scene.tx, f.walls, f.cfg.scene.bounds, res,
                                        f.cfg.propagation);
        benchmark::DoNotOptimize(map.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(20 * state.range(0)) *
                            (8 * state.range(0)));
}

void bench_openmp(benchmark::State& state) {
    Fixture f;
    const double res = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        PowerMap map = power_map(f.cfg.scene.tx, f.walls, f.cfg.scene.bounds, res,
                                 f.cfg.propagation);
        benchmark::DoNotOptimize(map.values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(20 * state.range(0)) *
                            (8 * state.range(0)));
}

}  // namespace

BENCHMARK(bench_serial)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(bench_openmp)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
