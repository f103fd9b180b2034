#include "hamreg/enumerate.hpp"

#include <array>
#include <fstream>
#include <set>

#include "hamreg/canonical.hpp"
#include "hamreg/hamilton.hpp"
#include "hamreg/parallel.hpp"
#include "hamreg/structure.hpp"

namespace hamreg {

namespace {

constexpr std::array<std::pair<Filter, const char*>, 6> kFilterNames{{
    {Filter::two_connected, "two-connected"},
    {Filter::has_cut_vertex, "cut-vertex"},
    {Filter::hamiltonian, "hamiltonian"},
    {Filter::non_hamiltonian, "non-hamiltonian"},
    {Filter::traceable, "traceable"},
    {Filter::non_traceable, "non-traceable"},
}};

std::uint64_t low_bits(int i) { return i >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << i) - 1; }

// Row-by-row generator for connected k-regular graphs; see the header for
// the symmetry rule.
class RegularGenerator {
 public:
  struct State {
    std::array<std::uint64_t, kMaxVertices> adj{};
    std::array<int, kMaxVertices> deg{};
    int row = 0;
  };

  RegularGenerator(int n, int k) : n_(n), k_(k), all_(low_bits(n)) {}

  std::vector<State> frontier(int depth) {
    frontier_depth_ = depth;
    frontier_.clear();
    state_ = State{};
    search(0);
    frontier_depth_ = -1;
    return std::move(frontier_);
  }

  void run(const State& from, std::set<std::string>& found) {
    found_ = &found;
    state_ = from;
    search(from.row);
  }

  std::uint64_t leaves() const { return leaves_; }

 private:
  void search(int i) {
    if (i == frontier_depth_) {
      state_.row = i;
      frontier_.push_back(state_);
      return;
    }
    if (i == n_) {
      leaf();
      return;
    }
    const int need = k_ - state_.deg[static_cast<std::size_t>(i)];
    std::uint64_t open = 0;
    for (int j = i + 1; j < n_; ++j) {
      if (state_.deg[static_cast<std::size_t>(j)] < k_) open |= std::uint64_t{1} << j;
    }
    if (std::popcount(open) < need) return;

    // Interchangeable classes among the open vertices, by first member.
    const std::uint64_t before = low_bits(i);
    std::vector<std::uint64_t> classes;
    std::uint64_t unassigned = open;
    while (unassigned) {
      const int j = std::countr_zero(unassigned);
      const std::uint64_t key = state_.adj[static_cast<std::size_t>(j)] & before;
      std::uint64_t cls = 0;
      for (Vertex u : VertexSet(unassigned)) {
        if ((state_.adj[static_cast<std::size_t>(u)] & before) == key) cls |= std::uint64_t{1} << u;
      }
      classes.push_back(cls);
      unassigned &= ~cls;
    }
    choose(i, classes, 0, need, 0);
  }

  // Picks how many of each class join row i, always the lowest-indexed ones.
  void choose(int i, const std::vector<std::uint64_t>& classes, std::size_t c, int need, std::uint64_t picked) {
    if (need == 0) {
      apply(i, picked, +1);
      if (feasible(i)) search(i + 1);
      apply(i, picked, -1);
      return;
    }
    if (c == classes.size()) return;
    int capacity = 0;
    for (std::size_t x = c; x < classes.size(); ++x) capacity += std::popcount(classes[x]);
    if (capacity < need) return;
    const std::uint64_t cls = classes[c];
    const int size = std::popcount(cls);
    for (int take = std::min(size, need); take >= 0; --take) {
      std::uint64_t chosen = 0;
      std::uint64_t rest = cls;
      for (int t = 0; t < take; ++t) {
        chosen |= rest & (~rest + 1);
        rest &= rest - 1;
      }
      choose(i, classes, c + 1, need - take, picked | chosen);
    }
  }

  void apply(int i, std::uint64_t nbrs, int sign) {
    for (Vertex j : VertexSet(nbrs)) {
      if (sign > 0) {
        state_.adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        state_.adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
      } else {
        state_.adj[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
        state_.adj[static_cast<std::size_t>(j)] &= ~(std::uint64_t{1} << i);
      }
      state_.deg[static_cast<std::size_t>(i)] += sign;
      state_.deg[static_cast<std::size_t>(j)] += sign;
    }
  }

  // Rows 0..i are complete.
  bool feasible(int i) const {
    const std::uint64_t later = all_ & ~low_bits(i + 1);
    if (later == 0) return true;
    std::uint64_t reach = 0;
    for (int v = 0; v <= i; ++v) reach |= state_.adj[static_cast<std::size_t>(v)];
    if ((reach & later) == 0) return false;  // rows 0..i closed off from the rest
    std::uint64_t open = 0;
    for (Vertex j : VertexSet(later)) {
      if (state_.deg[static_cast<std::size_t>(j)] < k_) open |= std::uint64_t{1} << j;
    }
    for (Vertex j : VertexSet(open)) {
      const std::uint64_t partners = open & ~state_.adj[static_cast<std::size_t>(j)] & ~(std::uint64_t{1} << j);
      if (k_ - state_.deg[static_cast<std::size_t>(j)] > std::popcount(partners)) return false;
    }
    return true;
  }

  void leaf() {
    ++leaves_;
    std::vector<std::uint64_t> rows(state_.adj.begin(), state_.adj.begin() + n_);
    const Graph g = Graph::from_rows(n_, std::move(rows));
    if (!is_connected(g)) return;
    found_->insert(canonical_form(g).bytes);
  }

  int n_;
  int k_;
  std::uint64_t all_;
  State state_;
  int frontier_depth_ = -1;
  std::vector<State> frontier_;
  std::set<std::string>* found_ = nullptr;
  std::uint64_t leaves_ = 0;
};

bool passes(const Graph& g, Filter f) {
  switch (f) {
    case Filter::two_connected: return is_two_connected(g);
    case Filter::has_cut_vertex: return !cut_vertices(g).empty();
    case Filter::hamiltonian: return hamiltonian_cycle(g).has_value();
    case Filter::non_hamiltonian: return !hamiltonian_cycle(g).has_value();
    case Filter::traceable: return hamiltonian_path(g).has_value();
    case Filter::non_traceable: return !hamiltonian_path(g).has_value();
  }
  return false;
}

}  // namespace

std::string to_string(Filter f) {
  for (const auto& [filter, name] : kFilterNames) {
    if (filter == f) return name;
  }
  return "unknown";
}

Filter filter_from_string(const std::string& name) {
  for (const auto& [filter, n] : kFilterNames) {
    if (name == n) return filter;
  }
  throw std::invalid_argument("unknown filter '" + name + "'");
}

int envelope_max_order(int k) {
  switch (k) {
    case 0:
    case 1:
    case 2: return 16;
    case 3: return 14;
    case 4: return 12;
    case 5: return 14;
    default: return 12;
  }
}

std::vector<Graph> apply_filters(std::vector<Graph> graphs, const std::vector<Filter>& filters) {
  for (Filter f : filters) {
    std::vector<Graph> kept;
    for (Graph& g : graphs) {
      if (passes(g, f)) kept.push_back(std::move(g));
    }
    graphs = std::move(kept);
  }
  return graphs;
}

EnumerationResult enumerate_connected_k_regular(const EnumerationTask& task) {
  const int n = task.n;
  const int k = task.k;
  if (n < 1 || n > kMaxVertices) throw GraphError("vertex count " + std::to_string(n) + " outside [1, 64]");
  EnumerationResult result;
  if (k < 0 || k >= n || (k * n) % 2 != 0) {
    result.diagnostic = "no connected " + std::to_string(k) + "-regular graph on " + std::to_string(n) +
                        " vertices: " + ((k * n) % 2 != 0 ? "k*n is odd" : "k must satisfy 0 <= k < n");
    return result;
  }
  if (task.enforce_envelope && n > envelope_max_order(k)) {
    throw EnvelopeError("k=" + std::to_string(k) + ", n=" + std::to_string(n) + " is outside the enumeration envelope (n <= " +
                        std::to_string(envelope_max_order(k)) + ")");
  }
  if (k == 0) {
    if (n == 1) result.graphs.push_back(Graph::empty(1));
    else result.diagnostic = "a 0-regular graph on more than one vertex is disconnected";
    return result;
  }

  std::set<std::string> found;
  RegularGenerator root(n, k);
  if (task.workers <= 1) {
    root.run(RegularGenerator::State{}, found);
    result.leaves = root.leaves();
  } else {
    const auto frontier = root.frontier(std::min(n, 3));
    std::vector<std::set<std::string>> partial(frontier.size());
    std::vector<std::uint64_t> leaves(frontier.size(), 0);
    parallel_for(frontier.size(), task.workers, [&](std::size_t i, int) {
      RegularGenerator worker(n, k);
      worker.run(frontier[i], partial[i]);
      leaves[i] = worker.leaves();
    });
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      found.merge(partial[i]);
      result.leaves += leaves[i];
    }
  }

  std::vector<Graph> graphs;
  graphs.reserve(found.size());
  for (const std::string& bytes : found) graphs.push_back(graph6_decode(bytes));
  graphs = apply_filters(std::move(graphs), task.filters);
  if (task.limit && graphs.size() > *task.limit) graphs.erase(graphs.begin() + static_cast<std::ptrdiff_t>(*task.limit), graphs.end());
  result.graphs = std::move(graphs);
  return result;
}

std::size_t count_connected_k_regular(int k, int n, int workers) {
  EnumerationTask task;
  task.k = k;
  task.n = n;
  task.workers = workers;
  return enumerate_connected_k_regular(task).graphs.size();
}

std::vector<Graph> enumerate_graphs(int n, int min_degree) {
  if (n < 1 || n > kMaxVertices) throw GraphError("vertex count " + std::to_string(n) + " outside [1, 64]");
  std::vector<Graph> level{Graph::empty(1)};
  for (int m = 2; m <= n; ++m) {
    const bool last = m == n;
    std::set<std::string> found;
    for (const Graph& h : level) {
      const int old = m - 1;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << old); ++s) {
        const int ds = std::popcount(s);
        if (last) {
          // The new vertex is a minimum-degree vertex of the result.
          if (ds < min_degree) continue;
          const int floor = std::max(ds, min_degree);
          bool ok = true;
          for (int u = 0; u < old && ok; ++u) ok = h.degree(u) + static_cast<int>((s >> u) & 1U) >= floor;
          if (!ok) continue;
        }
        std::vector<std::uint64_t> rows(h.rows().begin(), h.rows().end());
        rows.push_back(s);
        for (Vertex u : VertexSet(s)) rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << old;
        found.insert(canonical_form(Graph::from_rows(m, std::move(rows))).bytes);
      }
    }
    level.clear();
    for (const std::string& bytes : found) level.push_back(graph6_decode(bytes));
  }
  if (n == 1 && min_degree > 0) level.clear();
  return level;
}

Graph6Stream ingest_graph6(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Graph6Stream out = read_graph6(in);
  if (in.bad()) throw std::runtime_error("read error on " + path.string());
  return out;
}

}  // namespace hamreg
