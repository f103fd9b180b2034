#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamreg/graph.hpp"
#include "hamreg/graph6.hpp"

namespace hamreg {

class EnvelopeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Post-generation predicates applied in order.
enum class Filter {
  two_connected,
  has_cut_vertex,
  hamiltonian,
  non_hamiltonian,
  traceable,      // has a Hamiltonian path
  non_traceable,
};

std::string to_string(Filter f);
Filter filter_from_string(const std::string& name);

struct EnumerationTask {
  int k = 3;
  int n = 4;
  std::vector<Filter> filters;
  std::optional<std::size_t> limit;
  int workers = 1;
  // Reject (k, n) outside the desk-scale envelope unless cleared.
  bool enforce_envelope = true;
};

struct EnumerationResult {
  std::vector<Graph> graphs;          // canonical representatives, ascending canonical bytes
  std::optional<std::string> diagnostic;
  std::uint64_t leaves = 0;           // completed labelled graphs examined
};

// Largest n for which exhaustive enumeration of k-regular graphs is in the
// default envelope: 16 for k=2, 14 for k=3, 12 for k=4, 14 for k=5 and 12
// above.
int envelope_max_order(int k);

// One representative per isomorphism class of connected k-regular graphs on
// n vertices, each given in canonical labelling, ordered by canonical bytes.
// Infeasible parameters (k*n odd, k >= n, k < 0) give an empty result with a
// diagnostic; n outside [1, 64] throws GraphError and an envelope violation
// throws EnvelopeError.
//
// Rows are filled in order; when choosing vertex i's later neighbours,
// vertices with identical adjacency to rows 0..i-1 are interchangeable so
// only the lowest-indexed ones of each such class are used. The row-wise
// lexicographically largest labelling of every graph satisfies that rule, so
// no class is missed; completed graphs are deduplicated by canonical form.
EnumerationResult enumerate_connected_k_regular(const EnumerationTask& task);

std::size_t count_connected_k_regular(int k, int n, int workers = 1);

// All graphs on n vertices with minimum degree >= min_degree, up to
// isomorphism, in canonical labelling and canonical-byte order. Built by
// vertex extension with canonical deduplication; practical for n <= 9.
std::vector<Graph> enumerate_graphs(int n, int min_degree = 0);

// Throws std::runtime_error when the file cannot be read; bad lines become
// diagnostics.
Graph6Stream ingest_graph6(const std::filesystem::path& path);

// Applies filters (in order) to graphs.
std::vector<Graph> apply_filters(std::vector<Graph> graphs, const std::vector<Filter>& filters);

}  // namespace hamreg
