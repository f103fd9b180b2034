#include "hamreg/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "hamreg/structure.hpp"

namespace hamreg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void check_rt_even(int r, int t, const char* name) {
  require(r >= 2, std::string(name) + ": r must be at least 2");
  require(t % 2 == 0 && t >= 2 && t <= 2 * r - 2, std::string(name) + ": t must be even with 2 <= t <= 2r-2");
}

void check_rt_odd(int r, int t, const char* name) {
  require(r >= 1, std::string(name) + ": r must be at least 1");
  require(t % 2 == 0 && t >= 2 && t <= 2 * r, std::string(name) + ": t must be even with 2 <= t <= 2r");
}

std::vector<Vertex> iota_vertices(int from, int count) {
  std::vector<Vertex> vs(static_cast<std::size_t>(count));
  std::iota(vs.begin(), vs.end(), from);
  return vs;
}

// K_m on offset..offset+m-1 minus the matching {(offset, offset+1), ...} on
// `matched` vertices.
void add_clique_minus_matching(GraphBuilder& b, int offset, int m, int matched) {
  b.add_clique(iota_vertices(offset, m));
  for (int i = 0; i < matched; i += 2) b.remove_edge(offset + i, offset + i + 1);
}

void check_variant(int r, int t, const HPrimeVariant& v) {
  const int total = std::accumulate(v.cycles.begin(), v.cycles.end(), 0) + std::accumulate(v.paths.begin(), v.paths.end(), 0);
  require(std::all_of(v.cycles.begin(), v.cycles.end(), [](int c) { return c >= 3; }), "variant: cycles need at least 3 vertices");
  require(std::all_of(v.paths.begin(), v.paths.end(), [](int p) { return p >= 2; }), "variant: paths need at least 2 vertices");
  require(static_cast<int>(v.paths.size()) == (t + 2) / 2,
          "variant: needs exactly " + std::to_string((t + 2) / 2) + " paths, got " + std::to_string(v.paths.size()));
  require(total == 2 * r + 3, "variant: parts cover " + std::to_string(total) + " vertices, need " + std::to_string(2 * r + 3));
}

// Adds the H'-type block on offset..offset+2r+2 and returns its vertices of
// degree 2r (the ones a cut vertex attaches to).
std::vector<Vertex> add_h_prime_block(GraphBuilder& b, int offset, int r, int t, const std::optional<HPrimeVariant>& variant) {
  const int m = 2 * r + 3;
  b.add_clique(iota_vertices(offset, m));
  if (!variant) {
    for (int i = 0; i + 1 < m; i += 2) b.remove_edge(offset + i, offset + i + 1);
    b.remove_edge(offset + m - 1, offset);
    for (int i = 1; i + 1 <= 2 * r - t; i += 2) b.remove_edge(offset + i, offset + i + 1);
  } else {
    check_variant(r, t, *variant);
    int at = offset;
    for (int p : variant->paths) {
      for (int i = 0; i + 1 < p; ++i) b.remove_edge(at + i, at + i + 1);
      at += p;
    }
    for (int c : variant->cycles) {
      for (int i = 0; i < c; ++i) b.remove_edge(at + i, at + (i + 1) % c);
      at += c;
    }
  }
  std::vector<Vertex> low;
  for (int v = offset; v < offset + m; ++v) {
    if (b.degree(v) == 2 * r) low.push_back(v);
  }
  if (static_cast<int>(low.size()) != 2 * r + 1 - t) throw std::logic_error("H' block has the wrong degree profile");
  return low;
}

void enumerate_parts(int remaining, int count, int min_part, int max_part, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
  if (count == 0) {
    if (remaining == 0) out.push_back(acc);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= min_part; --p) {
    acc.push_back(p);
    enumerate_parts(remaining - p, count - 1, min_part, p, acc, out);
    acc.pop_back();
  }
}

void check_regular_connected(const Graph& g, int k, int n, const char* name) {
  if (g.order() != n || !is_k_regular(g, k) || !is_connected(g)) {
    throw std::logic_error(std::string(name) + ": construction lost regularity, order or connectivity");
  }
}

}  // namespace

std::vector<HPrimeVariant> all_h_prime_variants(int r, int t) {
  check_rt_odd(r, t, "all_h_prime_variants");
  const int total = 2 * r + 3;
  const int npaths = (t + 2) / 2;
  std::vector<HPrimeVariant> out;
  for (int path_vertices = 2 * npaths; path_vertices <= total; ++path_vertices) {
    std::vector<std::vector<int>> path_lists;
    std::vector<int> acc;
    enumerate_parts(path_vertices, npaths, 2, path_vertices, acc, path_lists);
    const int rest = total - path_vertices;
    std::vector<std::vector<int>> cycle_lists;
    for (int c = 0; 3 * c <= rest; ++c) enumerate_parts(rest, c, 3, rest, acc, cycle_lists);
    for (const auto& paths : path_lists) {
      for (const auto& cycles : cycle_lists) out.push_back({cycles, paths});
    }
  }
  return out;
}

std::string to_string(const HPrimeVariant& v) {
  std::ostringstream out;
  auto list = [&](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  };
  out << "paths=";
  list(v.paths);
  out << ";cycles=";
  list(v.cycles);
  return out.str();
}

HPrimeVariant h_prime_variant_from_string(const std::string& text) {
  HPrimeVariant v;
  bool saw_paths = false;
  bool saw_cycles = false;
  std::istringstream fields(text);
  std::string field;
  while (std::getline(fields, field, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw ParameterError("bad variant field '" + field + "'");
    const std::string key = field.substr(0, eq);
    std::vector<int>* target = nullptr;
    if (key == "paths" && !saw_paths) {
      target = &v.paths;
      saw_paths = true;
    } else if (key == "cycles" && !saw_cycles) {
      target = &v.cycles;
      saw_cycles = true;
    } else {
      throw ParameterError("bad variant key '" + key + "'");
    }
    std::istringstream parts(field.substr(eq + 1));
    std::string part;
    while (std::getline(parts, part, ',')) {
      try {
        std::size_t used = 0;
        const int x = std::stoi(part, &used);
        if (used != part.size()) throw ParameterError("bad variant part '" + part + "'");
        target->push_back(x);
      } catch (const std::logic_error&) {
        throw ParameterError("bad variant part '" + part + "'");
      }
    }
  }
  if (!saw_paths) throw ParameterError("variant needs a paths= field");
  std::sort(v.paths.rbegin(), v.paths.rend());
  std::sort(v.cycles.rbegin(), v.cycles.rend());
  return v;
}

namespace {
constexpr std::array<std::pair<Family, const char*>, 13> kFamilyNames{{
    {Family::f_rt, "F_rt"},
    {Family::f_prime_rt, "Fprime_rt"},
    {Family::family_f, "FamilyF"},
    {Family::h_rt, "H_rt"},
    {Family::h_prime_rt, "Hprime_rt"},
    {Family::family_h, "FamilyH"},
    {Family::no_path_f, "NoPathF"},
    {Family::no_path_h, "NoPathH"},
    {Family::petersen, "Petersen"},
    {Family::petersen_prime, "PetersenPrime"},
    {Family::circulant, "Circulant"},
    {Family::generalized_f, "GeneralizedF"},
    {Family::generalized_h, "GeneralizedH"},
}};
}  // namespace

std::string to_string(Family f) {
  for (const auto& [family, name] : kFamilyNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (const auto& [family, n] : kFamilyNames) {
    if (name == n) return family;
  }
  throw ParameterError("unknown family '" + name + "'");
}

void FamilyParams::validate() const { (void)build(*this); }

Graph build(const FamilyParams& p) {
  switch (p.family) {
    case Family::f_rt: return f_rt(p.r, p.t);
    case Family::f_prime_rt: return f_prime_rt(p.r, p.t);
    case Family::family_f: return family_f(p.r, p.t);
    case Family::h_rt: return h_rt(p.r, p.t);
    case Family::h_prime_rt: return h_prime_rt(p.r, p.t, p.variant);
    case Family::family_h: return family_h(p.r, p.t, p.variant);
    case Family::no_path_f: return no_path_f(p.k);
    case Family::no_path_h: return no_path_h(p.k);
    case Family::petersen: return petersen();
    case Family::petersen_prime: return petersen_prime();
    case Family::circulant: return circulant(p.n, p.connections);
    case Family::generalized_f:
      require(p.k % 2 == 0, "GeneralizedF needs even k");
      return generalized_no_hamilton(p.k, p.n, p.t == 0 ? 2 : p.t);
    case Family::generalized_h:
      require(p.k % 2 == 1, "GeneralizedH needs odd k");
      return generalized_no_hamilton(p.k, p.n, p.t == 0 ? 2 : p.t);
  }
  throw ParameterError("unknown family");
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

Graph petersen_prime() {
  const Graph p = petersen();
  constexpr Vertex replaced = 9;
  GraphBuilder b(12);
  for (const Edge& e : p.edges()) {
    if (e.u != replaced && e.v != replaced) b.add_edge(e.u, e.v);
  }
  const std::array<Vertex, 3> triangle{9, 10, 11};
  b.add_clique(triangle);
  int i = 0;
  for (Vertex u : p.neighbors(replaced)) b.add_edge(triangle[static_cast<std::size_t>(i++)], u);
  return b.build();
}

Graph f_rt(int r, int t) {
  check_rt_even(r, t, "f_rt");
  GraphBuilder b(2 * r + 2);
  add_clique_minus_matching(b, 0, 2 * r + 1, t);
  for (int i = 0; i < t; ++i) b.add_edge(2 * r + 1, i);
  return b.build();
}

Graph f_prime_rt(int r, int t) {
  check_rt_even(r, t, "f_prime_rt");
  GraphBuilder b(2 * r + 1);
  add_clique_minus_matching(b, 0, 2 * r + 1, 2 * r - t);
  return b.build();
}

Graph family_f(int r, int t) {
  check_rt_even(r, t, "family_f");
  const int n = 4 * r + 3;
  require(n <= kMaxVertices, "family_f: more than 64 vertices");
  GraphBuilder b(n);
  b.add_graph(f_rt(r, t), 0);
  const int offset = 2 * r + 2;
  b.add_graph(f_prime_rt(r, t), offset);
  for (int i = 0; i < 2 * r - t; ++i) b.add_edge(2 * r + 1, offset + i);
  Graph g = b.build();
  check_regular_connected(g, 2 * r, n, "family_f");
  return g;
}

Graph h_rt(int r, int t) {
  check_rt_odd(r, t, "h_rt");
  GraphBuilder b(2 * r + 3);
  add_clique_minus_matching(b, 0, 2 * r + 2, t);
  for (int i = 0; i < t; ++i) b.add_edge(2 * r + 2, i);
  return b.build();
}

Graph h_prime_rt(int r, int t, const std::optional<HPrimeVariant>& variant) {
  check_rt_odd(r, t, "h_prime_rt");
  GraphBuilder b(2 * r + 3);
  add_h_prime_block(b, 0, r, t, variant);
  return b.build();
}

Graph family_h(int r, int t, const std::optional<HPrimeVariant>& variant) {
  check_rt_odd(r, t, "family_h");
  const int n = 4 * r + 6;
  require(n <= kMaxVertices, "family_h: more than 64 vertices");
  GraphBuilder b(n);
  b.add_graph(h_rt(r, t), 0);
  const Vertex cut = 2 * r + 2;
  for (Vertex u : add_h_prime_block(b, 2 * r + 3, r, t, variant)) b.add_edge(cut, u);
  Graph g = b.build();
  check_regular_connected(g, 2 * r + 1, n, "family_h");
  return g;
}

Graph no_path_f(int k) {
  require(k % 2 == 0 && k >= 6, "no_path_f: k must be even and at least 6");
  const int n = 3 * k + 4;
  require(n <= kMaxVertices, "no_path_f: more than 64 vertices");
  GraphBuilder b(n);
  add_clique_minus_matching(b, 0, k + 1, 2);
  add_clique_minus_matching(b, k + 1, k + 1, 2);
  add_clique_minus_matching(b, 2 * k + 2, k + 1, k - 4);
  const Vertex cut = n - 1;
  for (Vertex v = 0; v < cut; ++v) {
    if (b.degree(v) == k - 1) b.add_edge(cut, v);
  }
  Graph g = b.build();
  check_regular_connected(g, k, n, "no_path_f");
  return g;
}

Graph no_path_h(int k) {
  require(k % 2 == 1 && k >= 5, "no_path_h: k must be odd and at least 5");
  const int n = 3 * k + 5;
  require(n <= kMaxVertices, "no_path_h: more than 64 vertices");
  GraphBuilder b(n);
  add_clique_minus_matching(b, 0, k + 1, 2);
  add_clique_minus_matching(b, k + 1, k + 1, 2);
  add_h_prime_block(b, 2 * k + 2, (k - 1) / 2, 4, std::nullopt);
  const Vertex cut = n - 1;
  for (Vertex v = 0; v < cut; ++v) {
    if (b.degree(v) == k - 1) b.add_edge(cut, v);
  }
  Graph g = b.build();
  check_regular_connected(g, k, n, "no_path_h");
  return g;
}

Graph circulant(int n, const std::vector<int>& connections) {
  require(n >= 2 && n <= kMaxVertices, "circulant: n must lie in [2, 64]");
  require(!connections.empty(), "circulant: empty connection set");
  GraphBuilder b(n);
  for (int s : connections) {
    require(s >= 1 && s <= n / 2, "circulant: offset " + std::to_string(s) + " outside [1, n/2]");
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + s) % n);
  }
  return b.build();
}

Graph regular_circulant(int m, int d) {
  require(d >= 1 && d < m, "regular_circulant: need 1 <= d < m");
  require(d % 2 == 0 || m % 2 == 0, "regular_circulant: odd degree needs an even order");
  std::vector<int> connections;
  for (int s = 1; s <= d / 2; ++s) connections.push_back(s);
  if (d % 2 == 1) connections.push_back(m / 2);
  Graph g = circulant(m, connections);
  if (!is_k_regular(g, d)) throw std::logic_error("regular_circulant: wrong degree");
  return g;
}

Graph generalized_no_hamilton(int k, int n, int t) {
  require(n <= kMaxVertices, "generalized_no_hamilton: more than 64 vertices");
  GraphBuilder b(n);
  if (k % 2 == 0) {
    require(k >= 4, "generalized_no_hamilton: even k must be at least 4");
    require(n % 2 == 1 && n >= 2 * k + 3, "generalized_no_hamilton: even k needs odd n >= 2k+3");
    require(t % 2 == 0 && t >= 2 && t <= k - 2, "generalized_no_hamilton: t must be even with 2 <= t <= k-2");
    const int m = n - k - 2;
    b.add_graph(regular_circulant(m, k), 0);
    const Vertex cut = m;
    for (int i = 0; i < t; i += 2) b.remove_edge(i, i + 1);
    for (int i = 0; i < t; ++i) b.add_edge(cut, i);
    add_clique_minus_matching(b, m + 1, k + 1, k - t);
    for (int i = 0; i < k - t; ++i) b.add_edge(cut, m + 1 + i);
  } else {
    require(k >= 3, "generalized_no_hamilton: odd k must be at least 3");
    require(n % 2 == 0 && n >= 2 * k + 4, "generalized_no_hamilton: odd k needs even n >= 2k+4");
    require(t % 2 == 0 && t >= 2 && t <= k - 1, "generalized_no_hamilton: t must be even with 2 <= t <= k-1");
    add_clique_minus_matching(b, 0, k + 1, t);
    const Vertex cut = k + 1;
    for (int i = 0; i < t; ++i) b.add_edge(cut, i);
    const int offset = k + 2;
    const int m = n - k - 2;
    b.add_graph(regular_circulant(m, k + 1), offset);
    // Path offset+0 .. offset+k-t+1 along the offset-1 cycle, then a matching
    // on the remaining vertices.
    for (int i = 0; i <= k - t; ++i) b.remove_edge(offset + i, offset + i + 1);
    for (int i = k - t + 2; i + 1 < m; i += 2) b.remove_edge(offset + i, offset + i + 1);
    for (int i = 1; i <= k - t; ++i) b.add_edge(cut, offset + i);
  }
  Graph g = b.build();
  check_regular_connected(g, k, n, "generalized_no_hamilton");
  if (cut_vertices(g).empty()) throw std::logic_error("generalized_no_hamilton: no cut vertex");
  return g;
}

namespace {

struct Split {
  Vertex cut;
  VertexSet small;  // component of the requested size
  VertexSet large;
};

// Within `side`, every attachment vertex misses exactly one other attachment
// vertex and nothing else is missing: side is a clique minus a perfect
// matching on `attach`.
bool clique_minus_matching_on(const Graph& g, VertexSet side, VertexSet attach) {
  for (Vertex x : side) {
    const VertexSet missing = side - g.neighbors(x) - VertexSet::single(x);
    if (attach.contains(x)) {
      if (missing.size() != 1 || !attach.contains(missing.front())) return false;
    } else if (!missing.empty()) {
      return false;
    }
  }
  return true;
}

std::optional<Split> split_at(const Graph& g, Vertex cut, int small_size, int large_size) {
  const auto parts = components_after_deletion(g, cut);
  if (parts.size() != 2) return std::nullopt;
  for (int i = 0; i < 2; ++i) {
    const VertexSet a = parts[static_cast<std::size_t>(i)];
    const VertexSet b = parts[static_cast<std::size_t>(1 - i)];
    if (a.size() == small_size && b.size() == large_size) return Split{cut, a, b};
  }
  return std::nullopt;
}

// Complement of g inside `side` as path and cycle vertex counts, provided it
// has maximum degree 2 and no isolated vertex.
std::optional<HPrimeVariant> complement_shape(const Graph& g, VertexSet side) {
  HPrimeVariant shape;
  VertexSet rest = side;
  auto missing = [&](Vertex x) { return side - g.neighbors(x) - VertexSet::single(x); };
  for (Vertex x : side) {
    const int d = missing(x).size();
    if (d < 1 || d > 2) return std::nullopt;
  }
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex x : frontier) next |= missing(x);
      next -= comp;
      comp |= next;
      frontier = next;
    }
    bool is_path = false;
    for (Vertex x : comp) is_path = is_path || missing(x).size() == 1;
    (is_path ? shape.paths : shape.cycles).push_back(comp.size());
    rest -= comp;
  }
  std::sort(shape.paths.rbegin(), shape.paths.rend());
  std::sort(shape.cycles.rbegin(), shape.cycles.rend());
  return shape;
}

struct HDecomposition {
  FamilyMembership params;
  HPrimeVariant variant;
};

std::optional<HDecomposition> decompose_h(const Graph& g) {
  const int n = g.order();
  if (n < 10 || (n - 6) % 4 != 0) return std::nullopt;
  const int r = (n - 6) / 4;
  if (!is_k_regular(g, 2 * r + 1) || !is_connected(g)) return std::nullopt;
  for (Vertex cut : cut_vertices(g)) {
    const auto split = split_at(g, cut, 2 * r + 2, 2 * r + 3);
    if (!split) continue;
    const VertexSet h_attach = g.neighbors(cut) & split->small;
    const int t = h_attach.size();
    if (t % 2 != 0 || t < 2 || t > 2 * r) continue;
    if (!clique_minus_matching_on(g, split->small, h_attach)) continue;
    const VertexSet hp_attach = g.neighbors(cut) & split->large;
    if (hp_attach.size() != 2 * r + 1 - t) continue;
    const auto shape = complement_shape(g, split->large);
    if (!shape || static_cast<int>(shape->paths.size()) != (t + 2) / 2) continue;
    bool attach_ok = true;
    for (Vertex x : split->large) {
      const int missing = (split->large - g.neighbors(x) - VertexSet::single(x)).size();
      attach_ok = attach_ok && ((missing == 2) == hp_attach.contains(x));
    }
    if (!attach_ok) continue;
    return HDecomposition{{r, t}, *shape};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilyMembership> is_family_f_member(const Graph& g) {
  const int n = g.order();
  if (n < 11 || (n - 3) % 4 != 0) return std::nullopt;
  const int r = (n - 3) / 4;
  if (!is_k_regular(g, 2 * r) || !is_connected(g)) return std::nullopt;
  const VertexSet cuts = cut_vertices(g);
  if (cuts.size() != 1) return std::nullopt;
  const auto split = split_at(g, cuts.front(), 2 * r + 1, 2 * r + 1);
  if (!split) return std::nullopt;
  const int t = (g.neighbors(split->cut) & split->small).size();
  if (t % 2 != 0 || t < 2 || t > 2 * r - 2) return std::nullopt;
  if (!clique_minus_matching_on(g, split->small, g.neighbors(split->cut) & split->small)) return std::nullopt;
  if (!clique_minus_matching_on(g, split->large, g.neighbors(split->cut) & split->large)) return std::nullopt;
  return FamilyMembership{r, std::min(t, 2 * r - t)};
}

std::optional<FamilyMembership> is_family_h_member(const Graph& g) {
  if (auto d = decompose_h(g)) return d->params;
  return std::nullopt;
}

std::optional<HPrimeVariant> family_h_variant(const Graph& g) {
  if (auto d = decompose_h(g)) return d->variant;
  return std::nullopt;
}

}  // namespace hamreg
