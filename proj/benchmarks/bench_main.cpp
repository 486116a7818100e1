#include <benchmark/benchmark.h>

#include <random>

#include "lavatube/comms.hpp"
#include "lavatube/engine.hpp"
#include "lavatube/world.hpp"

using namespace lavatube;

static void BM_MarkExplored(benchmark::State& state) {
  const EnvironmentSpec spec{50, 8, static_cast<int>(state.range(0)), Config::default_environment().obstacles};
  for (auto _ : state) {
    Environment env(spec);
    for (double x = 1; x < 49; x += 2) benchmark::DoNotOptimize(env.mark_explored({x, 4}, 2));
  }
}
BENCHMARK(BM_MarkExplored)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_FreeBoundary(benchmark::State& state) {
  Environment env({50, 8, static_cast<int>(state.range(0)), Config::default_environment().obstacles});
  for (double x = 1; x < 30; x += 1.5) env.mark_explored({x, 4}, 2);
  for (auto _ : state) benchmark::DoNotOptimize(env.free_boundary(Adjacency::Four));
}
BENCHMARK(BM_FreeBoundary)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_Step(benchmark::State& state) {
  Config c;
  c.environment.resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    state.PauseTiming();
    SimState s = init_simulation(c, 1);
    state.ResumeTiming();
    for (int k = 0; k < 5; ++k) step(s, c);
  }
}
BENCHMARK(BM_Step)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ShortestPath(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> coord(0, 3000);
  std::vector<Vec2> pos(static_cast<std::size_t>(state.range(0)));
  for (auto& p : pos) p = {coord(rng), coord(rng)};
  const auto g = comms::build_adjacency(pos, comms::CommParams{});
  for (auto _ : state) benchmark::DoNotOptimize(comms::shortest_path(g, 0, pos.size() - 1));
}
BENCHMARK(BM_ShortestPath)->Arg(16)->Arg(128)->Arg(512);
BENCHMARK_MAIN();
