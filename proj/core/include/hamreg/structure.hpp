#pragma once

#include <vector>

#include "hamreg/graph.hpp"

namespace hamreg {

struct BlockDecomposition {
  VertexSet cut_vertices;
  // Maximal 2-connected vertex sets, bridges as 2-sets and isolated vertices
  // as singletons, sorted by bit pattern.
  std::vector<VertexSet> blocks;
};

bool is_connected(const Graph& g);

// Connected components of g restricted to `within`, ordered by minimum vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
std::vector<VertexSet> components(const Graph& g);

// Components of g - v, ordered by minimum vertex. Throws GraphError if v is
// out of range.
std::vector<VertexSet> components_after_deletion(const Graph& g, Vertex v);

// Lowpoint DFS over every component.
VertexSet cut_vertices(const Graph& g);
BlockDecomposition block_decomposition(const Graph& g);

// n >= 3, connected, no cut vertex.
bool is_two_connected(const Graph& g);

bool is_k_regular(const Graph& g, int k);

// Vertices reachable from `from` inside `within` (from is included even if
// it lies outside `within`).
VertexSet reachable(const Graph& g, Vertex from, VertexSet within);

}  // namespace hamreg
