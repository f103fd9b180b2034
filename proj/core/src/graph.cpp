#include "hamreg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hamreg {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
  check_order(n);
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

Graph Graph::from_rows(int n, std::vector<std::uint64_t> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n) throw GraphError("row count does not match vertex count");
  const std::uint64_t in_range = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) {
    const std::uint64_t row = rows[static_cast<std::size_t>(v)];
    if (row & ~in_range) throw GraphError("neighbor outside vertex range");
    if ((row >> v) & 1U) throw GraphError("loop at vertex " + std::to_string(v));
    for (Vertex u : VertexSet(row)) {
      if (!((rows[static_cast<std::size_t>(u)] >> v) & 1U)) throw GraphError("adjacency is not symmetric");
    }
  }
  return Graph(std::move(rows));
}

Graph Graph::complete(int n) {
  check_order(n);
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  const std::uint64_t all = VertexSet::range(n).bits();
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = all & ~(std::uint64_t{1} << v);
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int sum = 0;
  for (std::uint64_t r : rows_) sum += std::popcount(r);
  return sum / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (v > u) out.push_back({u, v});
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : rows_(g.rows_) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw GraphError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  if (u == v) throw GraphError("loop edge at vertex " + std::to_string(u));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  return *this;
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const {
  check_pair(u, v);
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int GraphBuilder::degree(Vertex v) const { return std::popcount(rows_.at(static_cast<std::size_t>(v))); }

GraphBuilder& GraphBuilder::add_clique(std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
  }
  return *this;
}

GraphBuilder& GraphBuilder::add_graph(const Graph& g, int offset) {
  if (offset < 0 || offset + g.order() > order()) throw GraphError("subgraph does not fit");
  for (const Edge& e : g.edges()) add_edge(e.u + offset, e.v + offset);
  return *this;
}

Graph GraphBuilder::build() const { return Graph(rows_); }

std::vector<int> DegreeProfile::sorted() const {
  std::vector<int> out = degrees;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int DegreeProfile::count(int degree) const {
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), degree));
}

long DegreeProfile::degree_sum() const { return std::accumulate(degrees.begin(), degrees.end(), 0L); }

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::build(n, edges); }

Graph complement(const Graph& g) {
  const int n = g.order();
  const std::uint64_t all = VertexSet::range(n).bits();
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = ~g.rows()[static_cast<std::size_t>(v)] & all & ~(std::uint64_t{1} << v);
  }
  return Graph::from_rows(n, std::move(rows));
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (s.empty()) throw GraphError("induced subgraph of the empty vertex set");
  if (!s.is_subset_of(g.vertices())) throw GraphError("vertex set reaches past the graph");
  std::vector<Vertex> index_map = s.to_vector();
  std::vector<int> new_label(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < index_map.size(); ++i) new_label[static_cast<std::size_t>(index_map[i])] = static_cast<int>(i);
  const int m = static_cast<int>(index_map.size());
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    for (Vertex u : g.neighbors(index_map[static_cast<std::size_t>(i)]) & s) {
      rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << new_label[static_cast<std::size_t>(u)];
    }
  }
  return {Graph::from_rows(m, std::move(rows)), std::move(index_map)};
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) p.degrees.push_back(g.degree(v));
  p.min_degree = *std::min_element(p.degrees.begin(), p.degrees.end());
  p.max_degree = *std::max_element(p.degrees.begin(), p.degrees.end());
  if (p.min_degree == p.max_degree) p.regular_of = p.min_degree;
  return p;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation length does not match vertex count");
  std::uint64_t seen = 0;
  for (Vertex p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw GraphError("not a permutation");
    seen |= std::uint64_t{1} << p;
  }
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::uint64_t row = 0;
    for (Vertex u : g.neighbors(v)) row |= std::uint64_t{1} << perm[static_cast<std::size_t>(u)];
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
  }
  return Graph::from_rows(n, std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder builder(a.order() + b.order());
  builder.add_graph(a, 0).add_graph(b, a.order());
  return builder.build();
}

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace hamreg
