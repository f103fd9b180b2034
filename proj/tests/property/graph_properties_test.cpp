#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "hamreg/canonical.hpp"
#include "hamreg/construct.hpp"
#include "hamreg/enumerate.hpp"
#include "hamreg/graph.hpp"
#include "hamreg/graph6.hpp"
#include "oracles.hpp"

using namespace hamreg;

namespace {

std::vector<Graph> sample_graphs() {
  std::vector<Graph> out{petersen(), petersen_prime(), family_f(2, 2), family_h(1, 2), family_h(2, 2),
                         no_path_h(5), no_path_f(6), circulant(12, {1, 3}), Graph::complete(7), Graph::empty(5)};
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 20; ++i) out.push_back(oracle::random_graph(rng, 3 + i, 0.1 + 0.04 * i));
  return out;
}

}  // namespace

TEST(GraphProperty, CanonicalFormStableUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (const Graph& g : sample_graphs()) {
    const CanonicalForm base = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
      const auto perm = oracle::random_permutation(rng, g.order());
      ASSERT_EQ(canonical_form(relabel(g, perm)).bytes, base.bytes) << graph6_encode(g);
    }
  }
}

TEST(GraphProperty, CanonicalGraphDecodesFromBytes) {
  for (const Graph& g : sample_graphs()) {
    const CanonicalForm c = canonical_form(g);
    EXPECT_EQ(graph6_decode(c.bytes), relabel(g, c.perm));
    EXPECT_TRUE(oracle::isomorphic(graph6_decode(c.bytes), g));
  }
}

TEST(GraphProperty, Graph6RoundTripRandom) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<>(0.0, 1.0)(rng));
    ASSERT_EQ(graph6_decode(graph6_encode(g)), g);
  }
}

TEST(GraphProperty, Graph6RoundTripEnumerated) {
  for (auto [k, n] : {std::pair{3, 10}, {3, 12}, {4, 10}}) {
    for (const Graph& g : enumerate_connected_k_regular({.k = k, .n = n}).graphs) {
      ASSERT_EQ(graph6_decode(graph6_encode(g)), g);
    }
  }
}

TEST(GraphProperty, DegreeSumParity) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 40, 0.3);
    const DegreeProfile p = degree_profile(g);
    ASSERT_EQ(p.degree_sum(), 2L * g.edge_count());
    if (p.regular_of) ASSERT_EQ((*p.regular_of * g.order()) % 2, 0);
  }
}

TEST(GraphProperty, ConstructionsSymmetricLoopFree) {
  for (const Graph& g : sample_graphs()) {
    const Graph c = complement(g);
    for (const Graph* h : {&g, &c}) {
      for (Vertex v = 0; v < h->order(); ++v) {
        ASSERT_FALSE(h->has_edge(v, v));
        for (Vertex u : h->neighbors(v)) ASSERT_TRUE(h->has_edge(u, v));
      }
    }
  }
}

// Even pairs are relabelled copies; odd pairs are independent samples or a
// relabelled copy with one edge moved.
TEST(GraphProperty, AreIsomorphicMatchesBruteForce) {
  std::mt19937_64 rng(31337);
  int pairs = 0;
  int positive = 0;
  while (pairs < 1500) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const double p = std::uniform_real_distribution<>(0.1, 0.9)(rng);
    const Graph a = oracle::random_graph(rng, n, p);
    Graph b = (pairs % 2 == 0) ? relabel(a, oracle::random_permutation(rng, n)) : oracle::random_graph(rng, n, p);
    if (pairs % 4 == 1 && n >= 4 && a.edge_count() > 0) {
      GraphBuilder gb(a);
      const auto edges = a.edges();
      const Edge e = edges[rng() % edges.size()];
      gb.remove_edge(e.u, e.v);
      bool moved = false;
      for (Vertex u = 0; u < n && !moved; ++u)
        for (Vertex v = u + 1; v < n && !moved; ++v)
          if (!a.has_edge(u, v)) {
            gb.add_edge(u, v);
            moved = true;
          }
      b = relabel(gb.build(), oracle::random_permutation(rng, n));
    }
    const bool expected = oracle::isomorphic(a, b);
    ASSERT_EQ(are_isomorphic(a, b), expected) << graph6_encode(a) << " " << graph6_encode(b);
    positive += expected;
    ++pairs;
  }
  EXPECT_GT(positive, 500);
  EXPECT_LT(positive, pairs);
}

TEST(GraphProperty, CanonicalClassesOnSixVertices) {
  // Brute force over all 2^15 labelled graphs on six vertices.
  const auto naive = oracle::naive_all_graphs(6);
  EXPECT_EQ(naive.size(), enumerate_graphs(6).size());
  std::vector<std::string> forms;
  for (const Graph& g : naive) forms.push_back(canonical_form(g).bytes);
  std::sort(forms.begin(), forms.end());
  EXPECT_EQ(std::adjacent_find(forms.begin(), forms.end()), forms.end());
}

TEST(GraphProperty, AutomorphismsPreserveEdges) {
  for (const Graph& g : sample_graphs()) {
    for (const auto& perm : automorphisms_found(g)) ASSERT_EQ(relabel(g, perm), g);
  }
}
