#include <benchmark/benchmark.h>

#include "ncqm/dynamics.hpp"
#include "ncqm/hamiltonian.hpp"
#include "ncqm/rng.hpp"
#include "ncqm/scattering.hpp"
#include "ncqm/specfun.hpp"

using namespace ncqm;

static void BM_RadialDiagonalize(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  auto h = ham::build_radial_hamiltonian(0, 1.0, 0.5, len);
  for (auto _ : state) {
    auto pairs = ham::diagonalize(h, 3, true);
    benchmark::DoNotOptimize(pairs);
  }
}
BENCHMARK(BM_RadialDiagonalize)->Arg(100)->Arg(300)->Arg(600);

static void BM_SMatrixPoint(benchmark::State& state) {
  double e = 0.1;
  for (auto _ : state) {
    auto s = scatter::s_matrix(1, e, 1.0, 0.5);
    benchmark::DoNotOptimize(s);
    e += 1e-4;
    if (e > 7.9) e = 0.1;
  }
}
BENCHMARK(BM_SMatrixPoint);

static void BM_BuildPsiJm(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  opwave::Workspace ws(n_max, 0.5);
  RadialVector r;
  r.j = 2;
  r.lambda = 0.5;
  r.coeffs.assign(n_max - 1, cplx(0.3, -0.1));
  for (auto _ : state) {
    auto p = opwave::build_psi_jm(ws, {2, 1}, r);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_BuildPsiJm)->Arg(12)->Arg(24);

static void BM_HamiltonianApply(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  opwave::Workspace ws(n_max, 0.5);
  Rng rng(3);
  auto psi = ws.random_balanced(rng);
  auto h = ham::hamiltonian_superop(ws, 1.0);
  for (auto _ : state) {
    auto hp = h(psi);
    benchmark::DoNotOptimize(hp);
  }
}
BENCHMARK(BM_HamiltonianApply)->Arg(10)->Arg(20);

static void BM_LrlApply(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  opwave::Workspace ws(n_max, 1.0);
  Rng rng(5);
  auto psi = ws.random_balanced(rng);
  auto a = dyn::lrl_superop(ws, 2, 3.0);
  for (auto _ : state) {
    auto ap = a(psi);
    benchmark::DoNotOptimize(ap);
  }
}
BENCHMARK(BM_LrlApply)->Arg(10)->Arg(18);

static void BM_Hyp2f1Polynomial(benchmark::State& state) {
  for (auto _ : state) {
    auto v = specfun::hyp2f1(-1.0, -40.0, 2.0, -0.6);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_Hyp2f1Polynomial);

BENCHMARK_MAIN();
