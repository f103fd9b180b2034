#include "hamreg/hamilton.hpp"

#include <algorithm>
#include <stdexcept>

#include "hamreg/structure.hpp"

namespace hamreg {

namespace {

// ---------------------------------------------------------------------------
// Subset dynamic programming. ends[mask] holds every vertex e such that some
// path starting at the fixed start (or anywhere) visits exactly mask and
// stops at e.

class SubsetDp {
 public:
  SubsetDp(const Graph& g, Vertex start) : g_(g), n_(g.order()), start_(start) {}

  // Fixed start: returns the vertex order of a spanning path from start whose
  // last vertex satisfies accept(last).
  template <typename Accept>
  std::optional<std::vector<Vertex>> fixed_start(Accept accept) {
    const int others = n_ - 1;
    const std::uint64_t low = (std::uint64_t{1} << start_) - 1;
    auto expand = [&](std::uint64_t c) { return (c & low) | ((c & ~low) << 1); };
    auto compress = [&](std::uint64_t m) { return (m & low) | ((m >> 1) & ~low); };

    const std::size_t states = std::size_t{1} << others;
    ends_.assign(states, 0);
    ends_[0] = std::uint32_t{1} << start_;
    for (std::size_t c = 0; c < states; ++c) {
      const std::uint32_t here = ends_[c];
      if (!here) continue;
      const std::uint64_t visited = expand(c) | (std::uint64_t{1} << start_);
      for (Vertex e : VertexSet(here)) {
        for (Vertex u : VertexSet(g_.rows()[static_cast<std::size_t>(e)] & ~visited)) {
          ends_[compress(expand(c) | (std::uint64_t{1} << u))] |= std::uint32_t{1} << u;
        }
      }
    }
    const std::size_t full = states - 1;
    for (Vertex e : VertexSet(ends_[full])) {
      if (!accept(e)) continue;
      std::vector<Vertex> order{e};
      std::uint64_t mask = expand(full);
      Vertex cur = e;
      while (mask) {
        mask &= ~(std::uint64_t{1} << cur);
        const std::uint32_t prev = ends_[compress(mask)] & static_cast<std::uint32_t>(g_.rows()[static_cast<std::size_t>(cur)]);
        cur = std::countr_zero(prev);
        order.push_back(cur);
      }
      std::reverse(order.begin(), order.end());
      return order;
    }
    return std::nullopt;
  }

  // Any start.
  std::optional<std::vector<Vertex>> any_start() {
    const std::size_t states = std::size_t{1} << n_;
    ends_.assign(states, 0);
    for (Vertex v = 0; v < n_; ++v) ends_[std::size_t{1} << v] = std::uint32_t{1} << v;
    for (std::size_t mask = 1; mask < states; ++mask) {
      const std::uint32_t here = ends_[mask];
      if (!here) continue;
      for (Vertex e : VertexSet(here)) {
        for (Vertex u : VertexSet(g_.rows()[static_cast<std::size_t>(e)] & ~static_cast<std::uint64_t>(mask))) {
          ends_[mask | (std::size_t{1} << u)] |= std::uint32_t{1} << u;
        }
      }
    }
    const std::size_t full = states - 1;
    if (!ends_[full]) return std::nullopt;
    Vertex cur = std::countr_zero(ends_[full]);
    std::vector<Vertex> order{cur};
    std::size_t mask = full;
    while (std::popcount(mask) > 1) {
      mask &= ~(std::size_t{1} << cur);
      cur = std::countr_zero(ends_[mask] & static_cast<std::uint32_t>(g_.rows()[static_cast<std::size_t>(cur)]));
      order.push_back(cur);
    }
    std::reverse(order.begin(), order.end());
    return order;
  }

 private:
  const Graph& g_;
  int n_;
  Vertex start_;
  std::vector<std::uint32_t> ends_;
};

// ---------------------------------------------------------------------------
// Backtracking over simple paths from a fixed start.

class PathSearch {
 public:
  enum class Goal { hamiltonian_cycle, hamiltonian_path, cycle_through };

  PathSearch(const Graph& g, Goal goal, PruneOptions prune, VertexSet allowed = VertexSet(), VertexSet required = VertexSet())
      : g_(g), goal_(goal), prune_(prune), required_(required) {
    allowed_ = allowed.empty() ? g.vertices() : allowed;
  }

  std::optional<std::vector<Vertex>> from(Vertex start) {
    start_ = start;
    path_.assign(1, start);
    unvisited_ = allowed_ - VertexSet::single(start);
    if (extend(start)) return path_;
    return std::nullopt;
  }

 private:
  VertexSet nbrs(Vertex v) const { return g_.neighbors(v); }

  bool closable(Vertex end) const {
    return path_.size() >= 3 && g_.has_edge(end, start_);
  }

  bool extend(Vertex end) {
    if (goal_ == Goal::cycle_through) return extend_through(end);

    if (unvisited_.empty()) return goal_ == Goal::hamiltonian_path || closable(end);
    const bool cycle = goal_ == Goal::hamiltonian_cycle;

    if (prune_.connectivity) {
      if ((nbrs(end) & unvisited_).empty()) return false;
      if (cycle && (nbrs(start_) & unvisited_).empty()) return false;
      if (reachable(g_, unvisited_.front(), unvisited_) != unvisited_) return false;
    }

    // Usable neighbours of an unvisited vertex: unvisited ones, the path end
    // and, when closing a cycle, the start.
    VertexSet anchors = VertexSet::single(end);
    if (cycle) anchors.insert(start_);
    const VertexSet usable = unvisited_ | anchors;

    VertexSet forced;
    int low_count = 0;
    if (prune_.degree || prune_.dead_ends || prune_.forced_moves) {
      for (Vertex u : unvisited_) {
        const int avail = (nbrs(u) & usable).size();
        if (cycle) {
          if (prune_.degree && avail < 2) return false;
          if (prune_.forced_moves && avail == 2 && path_.size() >= 2 && g_.has_edge(u, end)) forced.insert(u);
        } else {
          if (prune_.dead_ends && avail <= 1) {
            if (avail == 0 || ++low_count > 1) return false;
          }
          if (prune_.forced_moves && avail == 1 && g_.has_edge(u, end)) forced.insert(u);
        }
      }
    }
    if (forced.size() > 1) return false;

    const VertexSet candidates = forced.empty() ? (nbrs(end) & unvisited_) : forced;
    for (Vertex next : candidates) {
      path_.push_back(next);
      unvisited_.erase(next);
      if (extend(next)) return true;
      unvisited_.insert(next);
      path_.pop_back();
    }
    return false;
  }

  bool extend_through(Vertex end) {
    const VertexSet missing = required_ & unvisited_;
    if (missing.empty() && closable(end)) return true;

    const VertexSet open = unvisited_;
    if (open.empty()) return false;
    if (prune_.connectivity || prune_.degree) {
      // The rest of the cycle runs from end through unvisited vertices back
      // to start, so it lives in end's component of G[unvisited + end].
      const VertexSet region = reachable(g_, end, open);
      if (prune_.connectivity) {
        if (!missing.is_subset_of(region)) return false;
        if (!missing.empty() || !closable(end)) {
          if ((nbrs(start_) & (region - VertexSet::single(end))).empty()) return false;
        }
      }
      if (prune_.degree) {
        const VertexSet usable = open | VertexSet{end, start_};
        for (Vertex r : missing) {
          if ((nbrs(r) & usable).size() < 2) return false;
        }
      }
    }
    for (Vertex next : nbrs(end) & open) {
      path_.push_back(next);
      unvisited_.erase(next);
      if (extend_through(next)) return true;
      unvisited_.insert(next);
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  Goal goal_;
  PruneOptions prune_;
  VertexSet allowed_;
  VertexSet required_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  VertexSet unvisited_;
};

bool use_dp(const Graph& g, const SolverOptions& options) {
  switch (options.engine) {
    case Engine::subset_dp:
      if (g.order() > kDpMaxOrder) {
        throw std::invalid_argument("subset DP engine supports at most 24 vertices, got " + std::to_string(g.order()));
      }
      return true;
    case Engine::backtracking:
      return false;
    case Engine::automatic:
      break;
  }
  return g.order() <= std::min(options.dp_max_order, kDpMaxOrder);
}

Certificate checked(const Graph& g, Certificate c) {
  if (!verify_certificate(g, c)) throw std::logic_error("solver produced an invalid certificate");
  return c;
}

std::optional<Certificate> wrap(const Graph& g, CertificateKind kind, std::optional<std::vector<Vertex>> order) {
  if (!order) return std::nullopt;
  return checked(g, Certificate{kind, std::move(*order), true});
}

}  // namespace

std::optional<Certificate> hamiltonian_cycle(const Graph& g, const SolverOptions& options) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  if (use_dp(g, options)) {
    SubsetDp dp(g, 0);
    return wrap(g, CertificateKind::cycle, dp.fixed_start([&](Vertex e) { return g.has_edge(e, 0); }));
  }
  PathSearch search(g, PathSearch::Goal::hamiltonian_cycle, options.prune);
  return wrap(g, CertificateKind::cycle, search.from(0));
}

std::optional<Certificate> hamiltonian_path(const Graph& g, const SolverOptions& options) {
  const int n = g.order();
  if (n == 1) return checked(g, Certificate{CertificateKind::path, {0}, true});
  VertexSet leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) return std::nullopt;
    if (g.degree(v) == 1) leaves.insert(v);
  }
  if (leaves.size() > 2 || !is_connected(g)) return std::nullopt;

  if (use_dp(g, options)) {
    SubsetDp dp(g, 0);
    return wrap(g, CertificateKind::path, dp.any_start());
  }
  // A degree-1 vertex has to be an end; reversing a path puts it first.
  const VertexSet starts = leaves.empty() ? g.vertices() : VertexSet::single(leaves.front());
  PathSearch search(g, PathSearch::Goal::hamiltonian_path, options.prune);
  for (Vertex s : starts) {
    if (auto order = search.from(s)) return wrap(g, CertificateKind::path, std::move(order));
  }
  return std::nullopt;
}

std::optional<Certificate> hamiltonian_path_from(const Graph& g, Vertex start, const SolverOptions& options) {
  const int n = g.order();
  if (start < 0 || start >= n) throw GraphError("start vertex " + std::to_string(start) + " out of range");
  if (n == 1) return checked(g, Certificate{CertificateKind::path, {0}, true});
  if (g.degree(start) == 0 || !is_connected(g)) return std::nullopt;
  if (use_dp(g, options)) {
    SubsetDp dp(g, start);
    return wrap(g, CertificateKind::path, dp.fixed_start([](Vertex) { return true; }));
  }
  PathSearch search(g, PathSearch::Goal::hamiltonian_path, options.prune);
  return wrap(g, CertificateKind::path, search.from(start));
}

std::optional<Certificate> cycle_through(const Graph& g, VertexSet required, const PruneOptions& prune) {
  if (!required.is_subset_of(g.vertices())) throw GraphError("required vertex out of range");
  if (g.order() < 3) return std::nullopt;

  auto finish = [&](std::vector<Vertex> order) {
    Certificate c{CertificateKind::cycle, std::move(order), false};
    c.spanning = static_cast<int>(c.order.size()) == g.order();
    if (!verify_cycle_through(g, required, c)) throw std::logic_error("cycle search produced an invalid certificate");
    return c;
  };

  if (!required.empty()) {
    PathSearch search(g, PathSearch::Goal::cycle_through, prune, g.vertices(), required);
    if (auto order = search.from(required.front())) return finish(std::move(*order));
    return std::nullopt;
  }
  // Any cycle: look for one whose smallest vertex is s.
  for (Vertex s = 0; s < g.order(); ++s) {
    const VertexSet allowed = g.vertices() - VertexSet::range(s);
    PathSearch search(g, PathSearch::Goal::cycle_through, prune, allowed, VertexSet::single(s));
    if (auto order = search.from(s)) return finish(std::move(*order));
  }
  return std::nullopt;
}

bool verify_certificate(const Graph& g, const Certificate& c) {
  const int n = g.order();
  if (c.order.empty()) return false;
  VertexSet seen;
  for (Vertex v : c.order) {
    if (v < 0 || v >= n || seen.contains(v)) return false;
    seen.insert(v);
  }
  if (c.spanning && seen != g.vertices()) return false;
  for (std::size_t i = 1; i < c.order.size(); ++i) {
    if (!g.has_edge(c.order[i - 1], c.order[i])) return false;
  }
  if (c.kind == CertificateKind::cycle) {
    if (c.order.size() < 3 || !g.has_edge(c.order.back(), c.order.front())) return false;
  }
  return true;
}

bool verify_cycle_through(const Graph& g, VertexSet required, const Certificate& c) {
  if (c.kind != CertificateKind::cycle || !verify_certificate(g, c)) return false;
  VertexSet on_cycle;
  for (Vertex v : c.order) on_cycle.insert(v);
  return required.is_subset_of(on_cycle);
}

}  // namespace hamreg
