#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hamreg/graph.hpp"

namespace hamreg {

// Isomorphism-invariant encoding of a graph. `bytes` is the graph6 encoding
// of the canonically relabelled graph, so equal bytes means isomorphic and
// the bytes decode to a representative of the class.
struct CanonicalForm {
  std::string bytes;
  std::vector<Vertex> perm;  // perm[v] = canonical label of v

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) { return a.bytes == b.bytes; }
  friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.bytes <=> b.bytes;
  }
};

// Individualization-refinement search. The initial partition orders vertices
// by degree; cells are refined to the coarsest equitable partition and the
// first non-singleton cell is individualized in ascending vertex order. The
// canonical leaf is the one whose relabelled adjacency rows are
// lexicographically least. Automorphisms found at equivalent leaves prune
// the search.
CanonicalForm canonical_form(const Graph& g);

// The relabelled graph relabel(g, canonical_form(g).perm).
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// Generators of the automorphism group found as a by-product of the search.
// They generate a subgroup of Aut(g); sufficient for orbit pruning, not a
// complete group description.
std::vector<std::vector<Vertex>> automorphisms_found(const Graph& g);

}  // namespace hamreg
