#include "hamreg/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "hamreg/graph6.hpp"

namespace hamreg {

namespace {

// Ordered partition of the vertex set; each cell is a bitset.
using Partition = std::vector<std::uint64_t>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition initial = degree_partition();
    search(initial, 0);
  }

  const std::vector<Vertex>& best_labelling() const { return best_lab_; }
  const std::vector<std::vector<Vertex>>& generators() const { return generators_; }

 private:
  std::uint64_t row(Vertex v) const { return g_.rows()[static_cast<std::size_t>(v)]; }

  Partition degree_partition() const {
    std::array<std::uint64_t, kMaxVertices> by_degree{};
    for (Vertex v = 0; v < n_; ++v) by_degree[static_cast<std::size_t>(g_.degree(v))] |= std::uint64_t{1} << v;
    Partition p;
    for (std::uint64_t cell : by_degree) {
      if (cell) p.push_back(cell);
    }
    return p;
  }

  // Refines p to the coarsest equitable partition below it. Each split is
  // decided by neighbour counts into a splitter cell and orders the pieces by
  // ascending count, so the result depends only on structure.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < p.size(); ++w) {
        const std::uint64_t splitter = p[w];
        for (std::size_t x = 0; x < p.size(); ++x) {
          const std::uint64_t cell = p[x];
          if (std::popcount(cell) == 1) continue;
          std::array<std::uint64_t, kMaxVertices + 1> by_count{};
          int lo = kMaxVertices;
          int hi = 0;
          for (Vertex v : VertexSet(cell)) {
            const int c = std::popcount(row(v) & splitter);
            by_count[static_cast<std::size_t>(c)] |= std::uint64_t{1} << v;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          Partition pieces;
          for (int c = lo; c <= hi; ++c) {
            if (by_count[static_cast<std::size_t>(c)]) pieces.push_back(by_count[static_cast<std::size_t>(c)]);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(x));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
          x += pieces.size() - 1;
          changed = true;
        }
      }
    }
  }

  // Orbits of the subgroup generated by the stored automorphisms that fix
  // every vertex of the current path.
  std::vector<int> stabilizer_orbits() const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gen : generators_) {
      bool fixes = std::all_of(path_.begin(), path_.end(),
                               [&](Vertex v) { return gen[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gen[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  // Returns the depth the search should unwind to; a value equal to `depth`
  // means carry on with the next sibling.
  int search(Partition p, int depth) {
    refine(p);
    if (static_cast<int>(p.size()) == n_) return leaf(p, depth);

    std::size_t target = 0;
    while (std::popcount(p[target]) == 1) ++target;
    const std::uint64_t cell = p[target];

    std::vector<Vertex> tried;
    std::size_t generators_seen = static_cast<std::size_t>(-1);
    std::vector<int> orbit;
    for (Vertex w : VertexSet(cell)) {
      if (!tried.empty()) {
        if (generators_seen != generators_.size()) {
          orbit = stabilizer_orbits();
          generators_seen = generators_.size();
        }
        const int ow = orbit[static_cast<std::size_t>(w)];
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return orbit[static_cast<std::size_t>(t)] == ow; })) {
          continue;
        }
      }
      Partition child = p;
      child[target] = cell & ~(std::uint64_t{1} << w);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::uint64_t{1} << w);
      path_.push_back(w);
      const int back = search(std::move(child), depth + 1);
      path_.pop_back();
      tried.push_back(w);
      if (back < depth) return back;
    }
    return depth;
  }

  std::vector<std::uint64_t> code_of(const std::vector<Vertex>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    std::vector<std::uint64_t> code(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      std::uint64_t r = 0;
      for (Vertex u : VertexSet(row(lab[static_cast<std::size_t>(i)]))) r |= std::uint64_t{1} << pos[static_cast<std::size_t>(u)];
      code[static_cast<std::size_t>(i)] = r;
    }
    return code;
  }

  static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    const auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<int>(ia - a.begin());
  }

  void add_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to) {
    std::vector<Vertex> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(i)])] = to[static_cast<std::size_t>(i)];
    bool identity = true;
    for (Vertex v = 0; v < n_; ++v) identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    if (!identity) generators_.push_back(std::move(gamma));
  }

  int leaf(const Partition& p, int depth) {
    std::vector<Vertex> lab(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) lab[static_cast<std::size_t>(i)] = std::countr_zero(p[static_cast<std::size_t>(i)]);
    std::vector<std::uint64_t> code = code_of(lab);

    if (first_lab_.empty()) {
      first_lab_ = lab;
      first_code_ = code;
      first_path_ = path_;
      best_lab_ = std::move(lab);
      best_code_ = std::move(code);
      best_path_ = path_;
      return depth;
    }
    // An automorphism mapping an earlier leaf onto this one also maps the
    // earlier leaf's branch at the point of divergence onto ours, so the rest
    // of our branch repeats what has been seen.
    if (code == first_code_) {
      add_automorphism(first_lab_, lab);
      return common_prefix(path_, first_path_);
    }
    if (code == best_code_) {
      add_automorphism(best_lab_, lab);
      return common_prefix(path_, best_path_);
    }
    if (code < best_code_) {
      best_lab_ = std::move(lab);
      best_code_ = std::move(code);
      best_path_ = path_;
    }
    return depth;
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> path_;
  std::vector<Vertex> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_code_, best_code_;
  std::vector<Vertex> first_path_, best_path_;
  std::vector<std::vector<Vertex>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalSearch search(g);
  search.run();
  const auto& lab = search.best_labelling();
  CanonicalForm out;
  out.perm.assign(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < g.order(); ++i) out.perm[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
  out.bytes = graph6_encode(relabel(g, out.perm));
  return out;
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).perm); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_profile(a).sorted() != degree_profile(b).sorted()) return false;
  return canonical_form(a).bytes == canonical_form(b).bytes;
}

std::vector<std::vector<Vertex>> automorphisms_found(const Graph& g) {
  CanonicalSearch search(g);
  search.run();
  return search.generators();
}

}  // namespace hamreg
