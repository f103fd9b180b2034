#include "hamreg/structure.hpp"

#include <algorithm>

namespace hamreg {

VertexSet reachable(const Graph& g, Vertex from, VertexSet within) {
  VertexSet seen = VertexSet::single(from);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) { return reachable(g, 0, g.vertices()) == g.vertices(); }

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within & g.vertices();
  while (!rest.empty()) {
    const VertexSet c = reachable(g, rest.front(), rest);
    out.push_back(c);
    rest -= c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

std::vector<VertexSet> components_after_deletion(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return components(g, g.vertices() - VertexSet::single(v));
}

namespace {

struct LowpointDfs {
  explicit LowpointDfs(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0) {}

  void run() {
    for (Vertex root = 0; root < g.order(); ++root) {
      if (disc[static_cast<std::size_t>(root)] >= 0) continue;
      if (g.degree(root) == 0) {
        disc[static_cast<std::size_t>(root)] = timer++;
        blocks.push_back(VertexSet::single(root));
        continue;
      }
      visit(root, -1);
    }
    std::sort(blocks.begin(), blocks.end());
  }

  void visit(Vertex v, Vertex parent) {
    auto& dv = disc[static_cast<std::size_t>(v)];
    auto& lv = low[static_cast<std::size_t>(v)];
    dv = lv = timer++;
    int children = 0;
    for (Vertex u : g.neighbors(v)) {
      if (u == parent) continue;
      auto du = disc[static_cast<std::size_t>(u)];
      if (du < 0) {
        edge_stack.push_back({v, u});
        ++children;
        visit(u, v);
        lv = std::min(lv, low[static_cast<std::size_t>(u)]);
        if (low[static_cast<std::size_t>(u)] >= dv) {
          if (parent >= 0) cuts.insert(v);
          VertexSet block;
          while (true) {
            const Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e.u == v && e.v == u) break;
          }
          blocks.push_back(block);
        }
      } else if (du < dv) {
        edge_stack.push_back({v, u});
        lv = std::min(lv, du);
      }
    }
    if (parent < 0 && children >= 2) cuts.insert(v);
  }

  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  int timer = 0;
  std::vector<Edge> edge_stack;
  VertexSet cuts;
  std::vector<VertexSet> blocks;
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  LowpointDfs dfs(g);
  dfs.run();
  return dfs.cuts;
}

BlockDecomposition block_decomposition(const Graph& g) {
  LowpointDfs dfs(g);
  dfs.run();
  return {dfs.cuts, std::move(dfs.blocks)};
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

bool is_k_regular(const Graph& g, int k) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != k) return false;
  }
  return true;
}

}  // namespace hamreg
