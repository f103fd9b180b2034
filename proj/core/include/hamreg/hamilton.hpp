#pragma once

#include <optional>
#include <vector>

#include "hamreg/graph.hpp"

namespace hamreg {

enum class CertificateKind { cycle, path };

// A witness vertex sequence. For a cycle the closing edge back to the first
// vertex is implied. Non-spanning certificates come from cycle_through.
struct Certificate {
  CertificateKind kind = CertificateKind::cycle;
  std::vector<Vertex> order;
  bool spanning = true;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class Engine {
  automatic,     // subset DP up to SolverOptions::dp_max_order, backtracking above
  subset_dp,     // (visited-set, endpoint) dynamic programming, n <= 24
  backtracking,  // depth-first search with pruning, any n
};

// Backtracking prunes; each one is sound on its own.
struct PruneOptions {
  // Cycle: every unvisited vertex keeps >= 2 usable neighbours.
  bool degree = true;
  // Unvisited region stays connected and attached to the path end(s).
  bool connectivity = true;
  // Path: at most one unvisited vertex may be down to a single usable
  // neighbour, since it has to be the far end.
  bool dead_ends = true;
  // Take a neighbour of the path end whose remaining options force it.
  bool forced_moves = true;
};

inline constexpr int kDpMaxOrder = 24;

struct SolverOptions {
  Engine engine = Engine::automatic;
  int dp_max_order = 20;
  PruneOptions prune;
};

// All solvers are exact. A returned certificate has been checked with
// verify_certificate; std::nullopt means no such cycle/path exists. Selecting
// Engine::subset_dp for a graph above kDpMaxOrder throws std::invalid_argument.
std::optional<Certificate> hamiltonian_cycle(const Graph& g, const SolverOptions& options = {});
std::optional<Certificate> hamiltonian_path(const Graph& g, const SolverOptions& options = {});
// Path whose first vertex is `start`.
std::optional<Certificate> hamiltonian_path_from(const Graph& g, Vertex start, const SolverOptions& options = {});

// A cycle (not necessarily spanning) through every vertex of `required`. An
// empty set asks for any cycle.
std::optional<Certificate> cycle_through(const Graph& g, VertexSet required, const PruneOptions& prune = {});

// Distinct in-range vertices, consecutive ones adjacent, the closing edge
// present for cycles (which need at least 3 vertices), and full coverage
// when the certificate is spanning.
bool verify_certificate(const Graph& g, const Certificate& c);
// verify_certificate plus: a cycle containing every vertex of `required`.
bool verify_cycle_through(const Graph& g, VertexSet required, const Certificate& c);

}  // namespace hamreg
