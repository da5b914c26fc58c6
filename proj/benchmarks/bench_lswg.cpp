#include <benchmark/benchmark.h>

#include "lswg/assembly.hpp"
#include "lswg/manufactured.hpp"
#include "lswg/quadrature.hpp"
#include "lswg/solver.hpp"

namespace {

using namespace lswg;

MeshFamily family_arg(const benchmark::State& state) {
  return state.range(0) == 0 ? MeshFamily::Triangular : MeshFamily::Pentagon;
}

SparseSpdSystem smooth_system(const WgSpace& space) {
  const auto sol = smooth_solution();
  const Eigen::Vector2d b(1, 1);
  const auto dofs = build_dof_map(space.mesh(), space.degree());
  return assemble(space, Coefficients(1e-2, b), sol.source(1e-2, b),
                  interpolate_cauchy_data(sol.cauchy_data(), space.mesh(), dofs));
}

// Args: family (0 triangular, 1 pentagon), k.
void BM_LocalOperators(benchmark::State& state) {
  const auto m = grid_family(family_arg(state), 3);
  const int k = static_cast<int>(state.range(1));
  int c = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_local_operators(m, c, k));
    c = (c + 1) % m.num_cells();
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_LocalOperators)->ArgsProduct({{0, 1}, {1, 2, 3, 4}});

void BM_CellRule(benchmark::State& state) {
  const auto m = grid_family(MeshFamily::Pentagon, 2);
  const auto poly = m.cell_polygon(0);
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cell_rule(poly, degree));
}
BENCHMARK(BM_CellRule)->Arg(4)->Arg(8)->Arg(12);

// Args: family, level, k.
void BM_Assemble(benchmark::State& state) {
  const auto m = grid_family(family_arg(state), static_cast<int>(state.range(1)));
  const WgSpace space(m, static_cast<int>(state.range(2)));
  int unknowns = 0;
  for (auto _ : state) unknowns = smooth_system(space).num_unknowns();
  state.counters["unknowns"] = unknowns;
}
BENCHMARK(BM_Assemble)->ArgsProduct({{0, 1}, {4, 5}, {2, 4}})->Unit(benchmark::kMillisecond);

// Args: family, level, k, solver (0 CG, 1 direct).
void BM_Solve(benchmark::State& state) {
  const auto m = grid_family(family_arg(state), static_cast<int>(state.range(1)));
  const WgSpace space(m, static_cast<int>(state.range(2)));
  const auto sys = smooth_system(space);
  const bool direct = state.range(3) == 1;
  int iterations = 0;
  for (auto _ : state) {
    const auto r = direct ? direct_solve(sys.matrix, sys.rhs) : cg_solve(sys.matrix, sys.rhs);
    iterations = r.report.iterations;
    benchmark::DoNotOptimize(r.x.data());
  }
  state.counters["unknowns"] = sys.num_unknowns();
  state.counters["iterations"] = iterations;
  state.SetLabel(direct ? "direct" : "cg");
}
BENCHMARK(BM_Solve)->ArgsProduct({{0, 1}, {4, 5}, {2}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
