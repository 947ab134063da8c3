#include <benchmark/benchmark.h>

#include "gdpm/gdpm.hpp"

using namespace gdpm;

namespace {

GeneratedProblem bench_problem(Index n, std::uint64_t seed) {
  SpectrumSpec spec;
  spec.n = n;
  spec.law = IndefiniteLaw{};
  spec.seed = seed;
  return gen_problem(spec, RhsKind::Zero);
}

void BM_matvec(benchmark::State& state) {
  auto gen = bench_problem(state.range(0), 1);
  Vector v = gen_initial_point(state.range(0), 2, PointLaw::StandardGaussian);
  for (auto _ : state) {
    Vector out = gen.problem.op.apply(v);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_matvec)->Arg(200)->Arg(1000);

void BM_gdm_step(benchmark::State& state) {
  auto gen = bench_problem(state.range(0), 3);
  auto st = gdm_init(gen.problem, gen_initial_point(state.range(0), 4, PointLaw::StandardGaussian),
                     1.0, 0.5);
  for (auto _ : state) {
    auto next = gdm_step(gen.problem, st);
    benchmark::DoNotOptimize(next.g_curr.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_gdm_step)->Arg(200)->Arg(1000);

void BM_gdeig_run(benchmark::State& state) {
  auto gen = bench_problem(200, 5);
  Vector x0 = gen_initial_point(200, 6, PointLaw::StandardGaussian);
  SolverConfig cfg;
  cfg.alpha = 1.0;
  cfg.max_iter = static_cast<int>(state.range(0));
  cfg.g_tol_abs = 1e-300;
  cfg.f_floor = -1e290;
  for (auto _ : state) {
    auto res = run_gdeig(gen.problem, x0, cfg);
    benchmark::DoNotOptimize(res.run.matvecs);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_gdeig_run)->Arg(100)->Arg(400);

void BM_pmm_step(benchmark::State& state) {
  auto gen = bench_problem(state.range(0), 7);
  auto st = pmm_init(gen_initial_point(state.range(0), 8, PointLaw::StandardGaussian), 0.5);
  for (auto _ : state) {
    st = pmm_step(gen.problem.op, st);
    benchmark::DoNotOptimize(st.nu_est);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_pmm_step)->Arg(200)->Arg(1000);

void BM_jacobi_eigensolve(benchmark::State& state) {
  auto gen = bench_problem(state.range(0), 9);
  Matrix a = gen.problem.op.dense();
  for (auto _ : state) {
    auto eig = jacobi_eigensolve(a);
    benchmark::DoNotOptimize(eig.eigenvalues.data());
  }
}
BENCHMARK(BM_jacobi_eigensolve)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_gen_problem(benchmark::State& state) {
  for (auto _ : state) {
    auto gen = bench_problem(state.range(0), 11);
    benchmark::DoNotOptimize(gen.eigenvalues.data());
  }
}
BENCHMARK(BM_gen_problem)->Arg(200)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
