// Microbenchmarks of the hot paths: spectral round trips, the nonlinear
// right-hand side, full integrator steps, and frequency-shell projection.

#include <benchmark/benchmark.h>

#include <complex>

#include "dysthe/evolve.hpp"
#include "dysthe/models.hpp"
#include "dysthe/rng.hpp"
#include "dysthe/spectral.hpp"

namespace {

using namespace dysthe;

FieldState make_data(const GridPtr& grid) {
  FieldState u = random_field(grid, 7, 0);
  for (auto& v : u.values) v *= 0.1;
  return u;
}

void bench_fft_roundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridPtr grid = make_grid(n, n, 16.0, 16.0);
  const FieldState u = make_data(grid);
  for (auto _ : state) {
    FieldState v = to_physical(to_spectral(u));
    benchmark::DoNotOptimize(v.values.data());
  }
  state.SetItemsProcessed(state.iterations() * grid->size());
}
BENCHMARK(bench_fft_roundtrip)->Arg(128)->Arg(256);

void bench_nonlinear_rhs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridPtr grid = make_grid(n, n, 16.0, 16.0);
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, grid);
  const FieldState u = to_spectral(make_data(grid));
  for (auto _ : state) {
    FieldState v = nonlinear_rhs(spec, u);
    benchmark::DoNotOptimize(v.values.data());
  }
}
BENCHMARK(bench_nonlinear_rhs)->Arg(128)->Arg(256);

void bench_etdrk4_step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridPtr grid = make_grid(n, n, 16.0, 16.0);
  const ModelSpec spec = assemble(ModelKind::NormalizedDysthe, {}, grid);
  const StepTables tables = make_step_tables(spec, Scheme::etdrk4, 1e-3);
  const FieldState u = to_spectral(make_data(grid));
  for (auto _ : state) {
    FieldState v = step(spec, tables, u);
    benchmark::DoNotOptimize(v.values.data());
  }
}
BENCHMARK(bench_etdrk4_step)->Arg(128)->Arg(256);

void bench_lp_project(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridPtr grid = make_grid(n, n, 16.0, 16.0);
  const FieldState u = to_spectral(make_data(grid));
  for (auto _ : state) {
    FieldState v = lp_project(u, 8.0);
    benchmark::DoNotOptimize(v.values.data());
  }
}
BENCHMARK(bench_lp_project)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
