#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hamreg/construct.hpp"
#include "hamreg/graph6.hpp"
#include "hamreg/hamilton.hpp"
#include "hamreg/structure.hpp"
#include "oracles.hpp"

using namespace hamreg;

namespace {

SolverOptions with(Engine e) {
  SolverOptions o;
  o.engine = e;
  return o;
}

// Sparse enough near the Hamiltonicity threshold that both answers occur.
double density(std::mt19937_64& rng, int n) {
  const double lo = 1.0 / n;
  return std::uniform_real_distribution<>(lo, std::min(1.0, 8.0 / n))(rng);
}

}  // namespace

TEST(SolverProperty, EnginesAgreeOnRandomGraphs) {
  std::mt19937_64 rng(424242);
  int cycles = 0;
  int paths = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 18);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    const auto dc = hamiltonian_cycle(g, with(Engine::subset_dp));
    const auto bc = hamiltonian_cycle(g, with(Engine::backtracking));
    const auto dp = hamiltonian_path(g, with(Engine::subset_dp));
    const auto bp = hamiltonian_path(g, with(Engine::backtracking));
    ASSERT_EQ(dc.has_value(), bc.has_value()) << graph6_encode(g);
    ASSERT_EQ(dp.has_value(), bp.has_value()) << graph6_encode(g);
    for (const auto* c : {&dc, &bc, &dp, &bp}) {
      if (*c) ASSERT_TRUE(verify_certificate(g, **c)) << graph6_encode(g);
    }
    cycles += dc.has_value();
    paths += dp.has_value();
  }
  EXPECT_GT(cycles, 100);
  EXPECT_LT(cycles, 1100);
  EXPECT_GT(paths, cycles);
}

TEST(SolverProperty, MatchesPlainSearchOnSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    ASSERT_EQ(hamiltonian_cycle(g).has_value(), oracle::has_hamiltonian_cycle(g)) << graph6_encode(g);
    ASSERT_EQ(hamiltonian_path(g).has_value(), oracle::has_hamiltonian_path(g)) << graph6_encode(g);
    const Vertex s = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    ASSERT_EQ(hamiltonian_path_from(g, s).has_value(), oracle::has_hamiltonian_path_from(g, s));
  }
}

TEST(SolverProperty, EachPruneAloneStaysExact) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    const bool cycle = hamiltonian_cycle(g, with(Engine::subset_dp)).has_value();
    const bool path = hamiltonian_path(g, with(Engine::subset_dp)).has_value();
    for (int mask = 0; mask < 16; ++mask) {
      SolverOptions o = with(Engine::backtracking);
      o.prune = {.degree = (mask & 1) != 0,
                 .connectivity = (mask & 2) != 0,
                 .dead_ends = (mask & 4) != 0,
                 .forced_moves = (mask & 8) != 0};
      ASSERT_EQ(hamiltonian_cycle(g, o).has_value(), cycle) << graph6_encode(g) << " mask " << mask;
      ASSERT_EQ(hamiltonian_path(g, o).has_value(), path) << graph6_encode(g) << " mask " << mask;
    }
  }
}

TEST(SolverProperty, MonotoneConsistency) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    const bool path = hamiltonian_path(g).has_value();
    if (hamiltonian_cycle(g)) ASSERT_TRUE(path);
    bool from_some = false;
    for (Vertex v = 0; v < n && !from_some; ++v) from_some = hamiltonian_path_from(g, v).has_value();
    ASSERT_EQ(from_some, path) << graph6_encode(g);
  }
}

TEST(SolverProperty, SpanningCycleThroughEqualsHamiltonianCycle) {
  std::mt19937_64 rng(9);
  std::vector<Graph> graphs{petersen(), petersen_prime(), family_f(2, 2), family_h(1, 2)};
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    graphs.push_back(oracle::random_graph(rng, n, density(rng, n)));
  }
  for (const Graph& g : graphs) {
    const auto c = cycle_through(g, g.vertices());
    ASSERT_EQ(c.has_value(), hamiltonian_cycle(g).has_value()) << graph6_encode(g);
    if (c) ASSERT_TRUE(verify_cycle_through(g, g.vertices(), *c));
  }
}

TEST(SolverProperty, CycleThroughMatchesOracle) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng() % 4 == 0) s.insert(v);
    }
    const auto c = cycle_through(g, s);
    ASSERT_EQ(c.has_value(), oracle::has_cycle_through(g, s)) << graph6_encode(g) << " " << to_string(s);
    if (c) ASSERT_TRUE(verify_cycle_through(g, s, *c));
  }
}

// Three or more components after deleting one vertex rule out a spanning path.
TEST(SolverProperty, ThreeComponentCutBlocksPath) {
  std::mt19937_64 rng(11);
  int instances = 0;
  for (int trial = 0; trial < 20000 && instances < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    if (!is_connected(g)) continue;
    bool three = false;
    for (Vertex v = 0; v < n && !three; ++v) three = components_after_deletion(g, v).size() >= 3;
    if (!three) continue;
    ++instances;
    ASSERT_FALSE(hamiltonian_path(g, with(Engine::subset_dp)).has_value()) << graph6_encode(g);
    ASSERT_FALSE(hamiltonian_path(g, with(Engine::backtracking)).has_value()) << graph6_encode(g);
  }
  for (const Graph& g : {no_path_h(5), no_path_f(6), no_path_h(7), no_path_f(8)}) {
    ASSERT_FALSE(hamiltonian_path(g, with(Engine::backtracking)).has_value());
  }
  EXPECT_GE(instances, 100);
}

TEST(SolverProperty, CertificatesAreDeterministic) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);
    const Graph g = oracle::random_graph(rng, n, density(rng, n));
    EXPECT_EQ(hamiltonian_cycle(g), hamiltonian_cycle(g));
    EXPECT_EQ(hamiltonian_path(g, with(Engine::backtracking)), hamiltonian_path(g, with(Engine::backtracking)));
  }
}
