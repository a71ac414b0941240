#include <benchmark/benchmark.h>

#include "latforge/catalog.hpp"
#include "latforge/linear.hpp"
#include "latforge/presented.hpp"
#include "latforge/term.hpp"
#include "latforge/transfer.hpp"
#include "latforge/window.hpp"

using namespace latforge;

static void BM_TableConstruction(benchmark::State& state) {
  const auto n = std::size_t(state.range(0));
  CoverSpec spec = make_boolean(n).to_cover_spec();
  for (auto _ : state) benchmark::DoNotOptimize(FiniteLattice::from_covers(spec));
}
BENCHMARK(BM_TableConstruction)->Arg(4)->Arg(6)->Arg(8);

static void BM_WhitmanCheck(benchmark::State& state) {
  FiniteLattice l = full_subspace_lattice(2, int(state.range(0))).lattice;
  for (auto _ : state) benchmark::DoNotOptimize(satisfies_whitman(l));
}
BENCHMARK(BM_WhitmanCheck)->Arg(3)->Arg(4);

static void BM_QuasiIdentity(benchmark::State& state) {
  FiniteLattice l = make_m(std::size_t(state.range(0)));
  QuasiIdentity q = momega_quasi_identity();
  for (auto _ : state) benchmark::DoNotOptimize(satisfies_quasi_identity(l, q));
}
BENCHMARK(BM_QuasiIdentity)->Arg(3)->Arg(5);

static void BM_PresentedClosure(benchmark::State& state) {
  Presentation pres = f_m_presentation(0);
  const auto cap = std::size_t(state.range(0));
  FiniteLattice n5 = make_n5();
  for (auto _ : state) benchmark::DoNotOptimize(presented_lattice(n5, pres, cap));
}
BENCHMARK(BM_PresentedClosure)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond);

static void BM_WindowSearch(benchmark::State& state) {
  const int w = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(notpure_system_solve(w, true));
}
BENCHMARK(BM_WindowSearch)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_SubspaceEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(full_subspace_lattice(2, int(state.range(0))));
}
BENCHMARK(BM_SubspaceEnumeration)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_EmbeddingSearch(benchmark::State& state) {
  FiniteLattice host = full_subspace_lattice(2, 4).lattice;
  FiniteLattice d4 = make_d4();
  for (auto _ : state) benchmark::DoNotOptimize(sublattice_embeddings(host, d4, 1));
}
BENCHMARK(BM_EmbeddingSearch);

BENCHMARK_MAIN();
