#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hamreg {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of vertices drawn from [0, 64), one bit per vertex.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  // {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }
  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  // Orders sets by their bit patterns; used for deterministic sorting only.
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected simple graph on 1..64 vertices labelled 0..n-1. Immutable once
// built; every operation that changes structure returns a new Graph.
class Graph {
 public:
  // Throws GraphError on n outside [1, 64], loops, or out-of-range endpoints.
  // Duplicate edges collapse.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Rows must describe a symmetric, loop-free relation on [0, n).
  static Graph from_rows(int n, std::vector<std::uint64_t> rows);
  static Graph empty(int n) { return from_rows(n, std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0)); }
  static Graph complete(int n);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return VertexSet(rows_[static_cast<std::size_t>(v)]); }
  bool has_edge(Vertex u, Vertex v) const { return (rows_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(Vertex v) const { return std::popcount(rows_[static_cast<std::size_t>(v)]); }
  int edge_count() const;
  // Edges with u < v in ascending (u, v) order.
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const { return rows_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}
  std::vector<std::uint64_t> rows_;

  friend class GraphBuilder;
};

// Mutable scratch space for assembling a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return static_cast<int>(rows_.size()); }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  // Adds all edges among the given vertices.
  GraphBuilder& add_clique(std::span<const Vertex> vs);
  // Copies g into vertices offset .. offset + g.order() - 1.
  GraphBuilder& add_graph(const Graph& g, int offset);
  Graph build() const;

 private:
  void check_pair(Vertex u, Vertex v) const;
  std::vector<std::uint64_t> rows_;
};

struct DegreeProfile {
  std::vector<int> degrees;  // degree of each vertex, by index
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> regular_of;

  // Sorted descending, for multiset comparisons.
  std::vector<int> sorted() const;
  int count(int degree) const;
  long degree_sum() const;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> index_map;  // new label -> original vertex
};

Graph build_graph(int n, std::span<const Edge> edges);
Graph complement(const Graph& g);
// Throws GraphError if s is empty or reaches past the graph.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
DegreeProfile degree_profile(const Graph& g);
// perm[v] is the new label of v; perm must be a permutation of [0, n).
Graph relabel(const Graph& g, std::span<const Vertex> perm);
Graph disjoint_union(const Graph& a, const Graph& b);

std::string to_string(VertexSet s);

}  // namespace hamreg
