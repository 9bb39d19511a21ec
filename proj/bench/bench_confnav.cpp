#include <benchmark/benchmark.h>

#include <filesystem>

#include "confnav/boundary.hpp"
#include "confnav/io.hpp"
#include "confnav/koebe.hpp"
#include "confnav/rhsolver.hpp"
#include "confnav/simulator.hpp"
#include "confnav/verify.hpp"

using namespace confnav;

namespace {

ValidatedWorkspace load(const char* name) {
  return validate_workspace(load_workspace(std::filesystem::path(CONFNAV_DATA_DIR) / name));
}

Execution exec_of(const benchmark::State& state) { return state.range(1) ? Execution::Parallel : Execution::Serial; }

struct Navigation {
  ValidatedWorkspace ws = load("four_obstacles.json");
  WorkspaceSolution sol;
  ControllerConfig cc;
  Navigation() {
    KoebeConfig cfg;
    cfg.nodes = 512;
    sol = solve_workspace(ws, cfg);
    cc.nav.world = sol.sphere_world;
    cc.nav.goal_image = sol.boundary_map.evaluate(ws.goal());
  }
};

const Navigation& navigation() {
  static const Navigation n;
  return n;
}

void BM_AssembleSystem(benchmark::State& state) {
  const auto ws = load("square.json");
  const auto smoothed = smooth_boundary(parametrize_polygon(ws.boundary_polygon(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_system(smoothed, ws.goal(), PieceKind::Bounded, exec_of(state)));
}
BENCHMARK(BM_AssembleSystem)->ArgsProduct({{512, 1024, 2048}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SolveFourObstacles(benchmark::State& state) {
  const auto ws = load("four_obstacles.json");
  KoebeConfig cfg;
  cfg.nodes = static_cast<std::size_t>(state.range(0));
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(solve_workspace(ws, cfg));
}
BENCHMARK(BM_SolveFourObstacles)->ArgsProduct({{256, 512}, {0, 1}})->Unit(benchmark::kMillisecond)->Iterations(1);

// Pulled-back potential on a grid: one cached Cauchy evaluation per free point.
void BM_PotentialGrid(benchmark::State& state) {
  const auto& n = navigation();
  const Controller ctl(n.sol.boundary_map, n.cc);
  for (auto _ : state) benchmark::DoNotOptimize(grid_minima(ctl, n.ws, 0.05, exec_of(state)));
}
BENCHMARK(BM_PotentialGrid)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_TrajectoryBatch(benchmark::State& state) {
  const auto& n = navigation();
  const Controller ctl(n.sol.boundary_map, n.cc);
  const auto starts = sample_free_space(n.ws, 8, 0, 1e-2);
  const SimulationConfig sc{0.05, 1000.0, 1e-3};
  for (auto _ : state) benchmark::DoNotOptimize(integrate_batch(starts, ctl, n.ws, sc, exec_of(state)));
}
BENCHMARK(BM_TrajectoryBatch)->ArgsProduct({{8}, {0, 1}})->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
