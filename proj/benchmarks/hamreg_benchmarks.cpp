#include <benchmark/benchmark.h>

#include <random>

#include "hamreg/canonical.hpp"
#include "hamreg/construct.hpp"
#include "hamreg/enumerate.hpp"
#include "hamreg/hamilton.hpp"

using namespace hamreg;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

SolverOptions with(Engine e) {
  SolverOptions o;
  o.engine = e;
  return o;
}

void BM_CanonicalPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalPetersen);

void BM_CanonicalRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(12)->Arg(24)->Arg(48);

void BM_CycleFamilyF(benchmark::State& state) {
  const Graph g = family_f(static_cast<int>(state.range(0)), 2);
  const Engine e = state.range(1) == 0 ? Engine::subset_dp : Engine::backtracking;
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_cycle(g, with(e)));
}
BENCHMARK(BM_CycleFamilyF)->Args({3, 0})->Args({3, 1})->Args({4, 0})->Args({4, 1})->Unit(benchmark::kMillisecond);

void BM_PathRandom(benchmark::State& state) {
  const Graph g = random_graph(18, 0.2, 7);
  const Engine e = state.range(0) == 0 ? Engine::subset_dp : Engine::backtracking;
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_path(g, with(e)));
}
BENCHMARK(BM_PathRandom)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NoPath(benchmark::State& state) {
  const Graph g = state.range(0) == 5 ? no_path_h(5) : no_path_f(6);
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_path(g, with(Engine::backtracking)));
}
BENCHMARK(BM_NoPath)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnumerateRegular(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_connected_k_regular(k, n));
}
BENCHMARK(BM_EnumerateRegular)->Args({3, 10})->Args({3, 12})->Args({4, 10})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
