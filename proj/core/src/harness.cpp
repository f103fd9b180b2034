#include "hamreg/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>

#include "hamreg/canonical.hpp"
#include "hamreg/construct.hpp"
#include "hamreg/enumerate.hpp"
#include "hamreg/graph6.hpp"
#include "hamreg/hamilton.hpp"
#include "hamreg/parallel.hpp"
#include "hamreg/structure.hpp"

namespace hamreg {

namespace {

using json = nlohmann::json;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <typename R, typename Eval>
std::vector<R> evaluate(const std::vector<Graph>& graphs, int workers, Eval eval) {
  std::vector<R> out(graphs.size());
  parallel_for(graphs.size(), workers, [&](std::size_t i, int) { out[i] = eval(graphs[i]); });
  return out;
}

std::vector<Graph> regular_graphs(int k, int n, const CheckOptions& options) {
  EnumerationTask task;
  task.k = k;
  task.n = n;
  task.workers = options.workers;
  task.enforce_envelope = !options.allow_large;
  return enumerate_connected_k_regular(task).graphs;
}

Counterexample make_counterexample(const Graph& g, Violation v, std::string reason, int k = 0) {
  return Counterexample{graph6_encode(g), v, std::move(reason), k, g.order()};
}

const KnownException* match_exception(const Graph& g, const std::vector<KnownException>& exceptions) {
  for (const KnownException& e : exceptions) {
    if (are_isomorphic(g, e.graph)) return &e;
  }
  return nullptr;
}

void record_exception(VerificationReport& report, const KnownException& e, const Graph& g) {
  report.exceptions_matched.push_back({e.name, graph6_encode(g), e.justification});
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

json variant_json(const HPrimeVariant& v) { return json{{"paths", v.paths}, {"cycles", v.cycles}}; }

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::refuted: return "refuted";
    case Verdict::verified_with_known_exceptions: return "verified-with-known-exceptions";
  }
  return "unknown";
}

std::string to_string(Violation v) {
  switch (v) {
    case Violation::not_hamiltonian: return "not-hamiltonian";
    case Violation::no_hamiltonian_path: return "no-hamiltonian-path";
    case Violation::unexpected_hamiltonian: return "unexpected-hamiltonian";
    case Violation::unexpected_path: return "unexpected-hamiltonian-path";
    case Violation::outside_family: return "non-hamiltonian-outside-family";
    case Violation::not_regular: return "not-regular";
    case Violation::disconnected: return "disconnected";
    case Violation::wrong_order: return "wrong-order";
    case Violation::membership_mismatch: return "membership-mismatch";
    case Violation::shortcut_missed: return "cut-vertex-shortcut-missed";
    case Violation::no_cycle_through: return "no-cycle-through-max-degree";
  }
  return "unknown";
}

bool reverify(const Counterexample& c) {
  Graph g = Graph::empty(1);
  try {
    g = graph6_decode(c.graph6);
  } catch (const Graph6Error&) {
    return false;
  }
  const bool odd_k = c.k % 2 != 0;
  switch (c.violation) {
    case Violation::not_hamiltonian: return !hamiltonian_cycle(g).has_value();
    case Violation::no_hamiltonian_path: return !hamiltonian_path(g).has_value();
    case Violation::unexpected_hamiltonian: return hamiltonian_cycle(g).has_value();
    case Violation::unexpected_path: return hamiltonian_path(g).has_value();
    case Violation::outside_family:
      return !hamiltonian_cycle(g).has_value() &&
             !(odd_k ? is_family_h_member(g).has_value() : is_family_f_member(g).has_value());
    case Violation::not_regular: return !is_k_regular(g, c.k);
    case Violation::disconnected: return !is_connected(g);
    case Violation::wrong_order: return g.order() != c.n;
    case Violation::membership_mismatch:
      // The decider's verdict is recorded in the reason; re-running it must
      // still disagree with membership of a generated graph.
      return !(odd_k ? is_family_h_member(g).has_value() : is_family_f_member(g).has_value()) ||
             hamiltonian_cycle(g).has_value();
    case Violation::shortcut_missed: {
      for (Vertex v : g.vertices()) {
        if (components_after_deletion(g, v).size() >= 3) return false;
      }
      return true;
    }
    case Violation::no_cycle_through: {
      const DegreeProfile p = degree_profile(g);
      VertexSet s;
      for (Vertex v : g.vertices()) {
        if (g.degree(v) == p.max_degree) s.insert(v);
      }
      return !cycle_through(g, s).has_value();
    }
  }
  return false;
}

KnownException known_exception(const std::string& name) {
  if (name == "Petersen") {
    return {name, petersen(), "Petersen graph: listed exception of the cubic 2-connected Hamiltonicity theorem"};
  }
  if (name == "PetersenPrime") {
    return {name, petersen_prime(),
            "Petersen graph with one vertex replaced by a triangle: listed exception of the same theorem"};
  }
  throw ConfigError("unknown exception graph '" + name + "'");
}

void VerificationReport::settle() {
  if (!counterexamples.empty()) verdict = Verdict::refuted;
  else if (!exceptions_matched.empty()) verdict = Verdict::verified_with_known_exceptions;
  else verdict = Verdict::verified;
}

json to_json(const VerificationReport& r) {
  json per_n = json::object();
  for (const auto& [n, count] : r.instances_per_n) per_n[std::to_string(n)] = count;
  json ces = json::array();
  for (const Counterexample& c : r.counterexamples) {
    ces.push_back({{"graph6", c.graph6}, {"violation", to_string(c.violation)}, {"reason", c.reason}});
  }
  json exc = json::array();
  for (const ExceptionMatch& e : r.exceptions_matched) {
    exc.push_back({{"name", e.name}, {"graph6", e.graph6}, {"justification", e.justification}});
  }
  return json{{"claim", r.claim},
              {"parameters", r.parameters},
              {"instances", r.instances},
              {"instances_per_n", per_n},
              {"counterexamples", ces},
              {"exceptions_matched", exc},
              {"wall_seconds", r.wall_seconds},
              {"verdict", to_string(r.verdict)},
              {"details", r.details}};
}

VerificationReport verify_hamiltonicity_threshold(int k, const CheckOptions& options) {
  require(k >= 2, "hamiltonicity threshold needs k >= 2");
  Stopwatch clock;
  VerificationReport report;
  report.claim = "hamiltonicity-threshold";
  report.parameters = {{"k", k}, {"n_min", k + 1}, {"n_max", 2 * k + 2}};
  for (int n = k + 1; n <= 2 * k + 2; ++n) {
    if ((k * n) % 2 != 0) continue;
    const auto graphs = regular_graphs(k, n, options);
    const auto found = evaluate<std::optional<Counterexample>>(graphs, options.workers, [&](const Graph& g) {
      std::optional<Counterexample> c;
      if (!hamiltonian_cycle(g)) c = make_counterexample(g, Violation::not_hamiltonian, "no Hamiltonian cycle", k);
      return c;
    });
    report.instances_per_n[n] = graphs.size();
    report.instances += graphs.size();
    for (const auto& c : found) {
      if (c) report.counterexamples.push_back(*c);
    }
  }
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

VerificationReport verify_characterization(int k, const CheckOptions& options) {
  require(k >= 2, "characterization needs k >= 2");
  Stopwatch clock;
  const bool odd = k % 2 != 0;
  const int n = odd ? 2 * k + 4 : 2 * k + 3;
  const int r = odd ? (k - 1) / 2 : k / 2;
  const bool exhaustive = k <= 4 || options.allow_large;
  if (!exhaustive && k != 5) {
    throw EnvelopeError("exhaustive characterization for k=" + std::to_string(k) + " needs allow_large");
  }
  const std::vector<KnownException> exceptions =
      options.exceptions ? *options.exceptions
                         : (k == 3 ? std::vector<KnownException>{known_exception("Petersen")} : std::vector<KnownException>{});

  VerificationReport report;
  report.claim = odd ? "nonhamiltonian-characterization-odd" : "nonhamiltonian-characterization-even";
  report.parameters = {{"k", k}, {"n", n}, {"r", r}, {"family", odd ? "FamilyH" : "FamilyF"}};
  auto membership = [&](const Graph& g) { return odd ? is_family_h_member(g) : is_family_f_member(g); };

  // Forward: every constructible member is a connected, k-regular,
  // non-Hamiltonian graph of order n that the decider recognises.
  struct Built {
    int t;
    std::optional<HPrimeVariant> variant;
    Graph graph;
  };
  std::vector<Built> built;
  const int t_max = odd ? 2 * r : 2 * r - 2;
  for (int t = 2; t <= t_max; t += 2) {
    if (odd) {
      for (const HPrimeVariant& v : all_h_prime_variants(r, t)) built.push_back({t, v, family_h(r, t, v)});
    } else {
      built.push_back({t, std::nullopt, family_f(r, t)});
    }
  }
  std::vector<Graph> built_graphs;
  for (const Built& b : built) built_graphs.push_back(b.graph);
  const auto forward_found =
      evaluate<std::vector<Counterexample>>(built_graphs, options.workers, [&](const Graph& g) {
        std::vector<Counterexample> out;
        if (g.order() != n) out.push_back(make_counterexample(g, Violation::wrong_order, "family member of wrong order", k));
        if (!is_k_regular(g, k)) out.push_back(make_counterexample(g, Violation::not_regular, "family member not regular", k));
        if (!is_connected(g)) out.push_back(make_counterexample(g, Violation::disconnected, "family member disconnected", k));
        if (hamiltonian_cycle(g)) {
          out.push_back(make_counterexample(g, Violation::unexpected_hamiltonian, "family member is Hamiltonian", k));
        }
        return out;
      });

  std::set<std::string> family_classes;
  json per_parameter = json::array();
  std::map<int, std::set<std::string>> classes_by_t;
  std::map<int, json> variants_by_t;
  for (std::size_t i = 0; i < built.size(); ++i) {
    const Built& b = built[i];
    for (const Counterexample& c : forward_found[i]) report.counterexamples.push_back(c);
    const auto m = membership(b.graph);
    const int expect_t = odd ? b.t : std::min(b.t, 2 * r - b.t);
    bool agrees = m && m->r == r && m->t == expect_t;
    if (agrees && odd) agrees = family_h_variant(b.graph) == b.variant;
    if (!agrees) {
      report.counterexamples.push_back(make_counterexample(
          b.graph, Violation::membership_mismatch,
          "decider does not recover (r=" + std::to_string(r) + ", t=" + std::to_string(b.t) +
              (b.variant ? ", " + to_string(*b.variant) : std::string{}) + ")",
          k));
    }
    const std::string bytes = canonical_form(b.graph).bytes;
    family_classes.insert(bytes);
    classes_by_t[b.t].insert(bytes);
    if (!variants_by_t.count(b.t)) variants_by_t[b.t] = json::array();
    if (b.variant) variants_by_t[b.t].push_back(variant_json(*b.variant));
    else variants_by_t[b.t].push_back("default");
  }
  for (const auto& [t, classes] : classes_by_t) {
    per_parameter.push_back({{"r", r}, {"t", t}, {"constructions", variants_by_t[t].size()}, {"variants", variants_by_t[t]}, {"isomorphism_classes", classes.size()}});
  }
  report.details["forward"] = {{"constructions", built.size()},
                               {"isomorphism_classes", family_classes.size()},
                               {"per_parameter", per_parameter},
                               {"holds", report.counterexamples.empty()}};

  if (!exhaustive) {
    report.details["reverse"] = {{"skipped", "exhaustive enumeration at this order is opt-in (allow_large)"}};
    report.instances = built.size();
    report.wall_seconds = clock.seconds();
    report.settle();
    return report;
  }

  // Reverse: every non-Hamiltonian graph is a member or a declared exception.
  const auto graphs = regular_graphs(k, n, options);
  report.instances = graphs.size();
  report.instances_per_n[n] = graphs.size();
  enum class Kind { hamiltonian, member, exception, outside, hamiltonian_member };
  struct Outcome {
    Kind kind = Kind::hamiltonian;
    const KnownException* exception = nullptr;
  };
  const auto outcomes = evaluate<Outcome>(graphs, options.workers, [&](const Graph& g) {
    const bool ham = hamiltonian_cycle(g).has_value();
    const bool is_member = membership(g).has_value();
    if (ham) return Outcome{is_member ? Kind::hamiltonian_member : Kind::hamiltonian};
    if (is_member) return Outcome{Kind::member};
    if (const KnownException* e = match_exception(g, exceptions)) return Outcome{Kind::exception, e};
    return Outcome{Kind::outside};
  });
  const std::size_t forward_failures = report.counterexamples.size();
  std::uint64_t non_hamiltonian = 0;
  std::set<std::string> members_found;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    switch (outcomes[i].kind) {
      case Kind::hamiltonian: break;
      case Kind::hamiltonian_member:
        report.counterexamples.push_back(
            make_counterexample(g, Violation::unexpected_hamiltonian, "decider accepts a Hamiltonian graph", k));
        break;
      case Kind::member:
        ++non_hamiltonian;
        members_found.insert(graph6_encode(g));  // enumerated graphs are canonical
        break;
      case Kind::exception:
        ++non_hamiltonian;
        record_exception(report, *outcomes[i].exception, g);
        break;
      case Kind::outside:
        ++non_hamiltonian;
        report.counterexamples.push_back(make_counterexample(
            g, Violation::outside_family, "non-Hamiltonian but neither a family member nor a declared exception", k));
        break;
    }
  }
  // Every member found must be one the generators produce, and vice versa.
  for (const std::string& bytes : members_found) {
    if (!family_classes.count(bytes)) {
      report.counterexamples.push_back(make_counterexample(graph6_decode(bytes), Violation::membership_mismatch,
                                                           "decider accepts a graph no generator produced", k));
    }
  }
  std::uint64_t generated_missing = 0;
  for (const std::string& bytes : family_classes) generated_missing += members_found.count(bytes) ? 0 : 1;
  report.details["reverse"] = {{"graphs", graphs.size()},
                               {"non_hamiltonian", non_hamiltonian},
                               {"family_members", members_found.size()},
                               {"exceptions", report.exceptions_matched.size()},
                               {"generated_classes_not_enumerated", generated_missing},
                               {"holds", report.counterexamples.size() == forward_failures && generated_missing == 0}};
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

VerificationReport verify_hampath_threshold(int k, const CheckOptions& options) {
  require(k >= 2, "Hamiltonian path threshold needs k >= 2");
  Stopwatch clock;
  VerificationReport report;
  report.claim = "hampath-threshold";
  const int n_max = 3 * k + 3;
  report.parameters = {{"k", k}, {"n_min", k + 1}, {"n_max", n_max}};
  const int exhaustive_max = options.allow_large ? n_max : std::min(n_max, k <= 4 ? 12 : 11);
  json sampled = json::array();
  std::set<std::string> seen;
  auto check = [&](const std::vector<Graph>& graphs, int n) {
    const auto found = evaluate<std::optional<Counterexample>>(graphs, options.workers, [&](const Graph& g) {
      std::optional<Counterexample> c;
      if (!hamiltonian_path(g)) c = make_counterexample(g, Violation::no_hamiltonian_path, "no Hamiltonian path", k);
      return c;
    });
    report.instances_per_n[n] += graphs.size();
    report.instances += graphs.size();
    for (const auto& c : found) {
      if (c) report.counterexamples.push_back(*c);
    }
  };
  for (int n = k + 1; n <= n_max; ++n) {
    if ((k * n) % 2 != 0) continue;
    if (n <= exhaustive_max) {
      const auto graphs = regular_graphs(k, n, options);
      for (const Graph& g : graphs) seen.insert(graph6_encode(g));
      check(graphs, n);
      continue;
    }
    // Above the envelope: constructed instances only.
    std::vector<Graph> samples{regular_circulant(n, k)};
    std::vector<std::string> names{"circulant"};
    try {
      samples.push_back(generalized_no_hamilton(k, n));
      names.push_back("generalized");
    } catch (const ParameterError&) {
    }
    if (k % 2 == 0 && n == 2 * k + 3) {
      for (int t = 2; t <= k - 2; t += 2) {
        samples.push_back(family_f(k / 2, t));
        names.push_back("FamilyF t=" + std::to_string(t));
      }
    }
    if (k % 2 != 0 && k >= 3 && n == 2 * k + 4) {
      for (int t = 2; t <= k - 1; t += 2) {
        samples.push_back(family_h((k - 1) / 2, t));
        names.push_back("FamilyH t=" + std::to_string(t));
      }
    }
    check(samples, n);
    sampled.push_back({{"n", n}, {"constructions", names}});
  }
  report.details["exhaustive_max_n"] = exhaustive_max;
  report.details["sampled"] = sampled;
  if (k == 3) {
    report.details["includes_petersen"] = seen.count(canonical_form(petersen()).bytes) > 0;
    report.details["includes_petersen_prime"] = seen.count(canonical_form(petersen_prime()).bytes) > 0;
  }
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

VerificationReport verify_hampath_counterexamples(const CheckOptions& options) {
  Stopwatch clock;
  VerificationReport report;
  report.claim = "hampath-counterexamples";
  struct Case {
    int k;
    bool even;
  };
  const std::vector<Case> cases{{5, false}, {6, true}, {7, false}, {8, true}};
  report.parameters = {{"k", json::array({5, 6, 7, 8})}};
  std::vector<Graph> graphs;
  for (const Case& c : cases) graphs.push_back(c.even ? no_path_f(c.k) : no_path_h(c.k));
  SolverOptions solver;
  solver.engine = Engine::backtracking;

  struct Outcome {
    std::vector<Counterexample> failures;
    json detail;
  };
  std::vector<Outcome> outcomes(graphs.size());
  parallel_for(graphs.size(), options.workers, [&](std::size_t i, int) {
    const Graph& g = graphs[i];
    const int k = cases[i].k;
    const int expected_n = cases[i].even ? 3 * k + 4 : 3 * k + 5;
    Outcome& out = outcomes[i];
    if (g.order() != expected_n) out.failures.push_back(make_counterexample(g, Violation::wrong_order, "wrong order", k));
    if (!is_k_regular(g, k)) out.failures.push_back(make_counterexample(g, Violation::not_regular, "not k-regular", k));
    if (!is_connected(g)) out.failures.push_back(make_counterexample(g, Violation::disconnected, "disconnected", k));
    std::optional<Vertex> shortcut;
    json sizes = json::array();
    for (Vertex v : cut_vertices(g)) {
      const auto parts = components_after_deletion(g, v);
      if (parts.size() >= 3) {
        shortcut = v;
        for (VertexSet p : parts) sizes.push_back(p.size());
        break;
      }
    }
    if (!shortcut) {
      out.failures.push_back(make_counterexample(g, Violation::shortcut_missed, "no cut vertex with 3 components", k));
    }
    const bool path = hamiltonian_path(g, solver).has_value();
    if (path) out.failures.push_back(make_counterexample(g, Violation::unexpected_path, "Hamiltonian path found", k));
    out.detail = {{"family", cases[i].even ? "NoPathF" : "NoPathH"},
                  {"k", k},
                  {"n", g.order()},
                  {"graph6", graph6_encode(g)},
                  {"shortcut_fires", shortcut.has_value()},
                  {"cut_vertex", shortcut ? json(*shortcut) : json(nullptr)},
                  {"component_sizes", sizes},
                  {"solver", "backtracking"},
                  {"hamiltonian_path", path}};
  });
  json instances = json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (const Counterexample& c : outcomes[i].failures) report.counterexamples.push_back(c);
    instances.push_back(outcomes[i].detail);
    ++report.instances_per_n[graphs[i].order()];
  }
  report.instances = graphs.size();
  report.details["instances"] = instances;
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

namespace {

// Shared by the Jackson and Hilbig spot checks.
void two_connected_sweep(VerificationReport& report, int k, int n_max, const std::vector<KnownException>& exceptions,
                         const CheckOptions& options) {
  std::set<std::string> matched;
  for (int n = k + 1; n <= n_max; ++n) {
    if ((k * n) % 2 != 0) continue;
    const auto graphs = apply_filters(regular_graphs(k, n, options), {Filter::two_connected});
    const auto ham = evaluate<char>(graphs, options.workers, [](const Graph& g) { return static_cast<char>(hamiltonian_cycle(g).has_value()); });
    report.instances_per_n[n] = graphs.size();
    report.instances += graphs.size();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (ham[i]) continue;
      if (const KnownException* e = match_exception(graphs[i], exceptions)) {
        record_exception(report, *e, graphs[i]);
        matched.insert(e->name);
      } else {
        report.counterexamples.push_back(
            make_counterexample(graphs[i], Violation::not_hamiltonian, "2-connected but no Hamiltonian cycle", k));
      }
    }
  }
  json missing = json::array();
  for (const KnownException& e : exceptions) {
    if (!matched.count(e.name)) missing.push_back(e.name);
  }
  report.details["declared_exceptions"] = exceptions.size();
  report.details["missing_exceptions"] = missing;
  report.details["exception_set_exact"] = missing.empty();
}

}  // namespace

VerificationReport verify_jackson_spot(int k, int n_max, const CheckOptions& options) {
  require(k >= 2, "Jackson spot check needs k >= 2");
  require(n_max <= 3 * k, "Jackson spot check covers n <= 3k only");
  Stopwatch clock;
  VerificationReport report;
  report.claim = "jackson-spot";
  report.parameters = {{"k", k}, {"n_max", n_max}};
  two_connected_sweep(report, k, n_max, options.exceptions.value_or(std::vector<KnownException>{}), options);
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

VerificationReport verify_hilbig_spot(const CheckOptions& options) {
  Stopwatch clock;
  VerificationReport report;
  report.claim = "hilbig-spot";
  report.parameters = {{"k", 3}, {"n_max", 12}};
  const auto exceptions = options.exceptions.value_or(
      std::vector<KnownException>{known_exception("Petersen"), known_exception("PetersenPrime")});
  two_connected_sweep(report, 3, 12, exceptions, options);
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

VerificationReport verify_cycle_through_max_degree(int n_max, const CheckOptions& options) {
  require(n_max >= 3, "cycle-through sweep needs n_max >= 3");
  if (n_max > 10) throw EnvelopeError("cycle-through sweep is limited to n <= 10");
  if (n_max > 8 && !options.allow_large) throw EnvelopeError("cycle-through sweep beyond n=8 needs allow_large");
  Stopwatch clock;
  VerificationReport report;
  report.claim = "max-degree-cycle";
  report.parameters = {{"n_max", n_max}};
  std::uint64_t outside_hypothesis = 0;
  for (int n = 3; n <= n_max; ++n) {
    std::vector<Graph> graphs;
    for (Graph& g : apply_filters(enumerate_graphs(n, 2), {Filter::two_connected})) {
      if (n <= 3 * degree_profile(g).max_degree - 2) graphs.push_back(std::move(g));
      else ++outside_hypothesis;
    }
    const auto found = evaluate<std::optional<Counterexample>>(graphs, options.workers, [](const Graph& g) {
      const int delta = degree_profile(g).max_degree;
      VertexSet s;
      for (Vertex v : g.vertices()) {
        if (g.degree(v) == delta) s.insert(v);
      }
      std::optional<Counterexample> c;
      if (!cycle_through(g, s)) c = make_counterexample(g, Violation::no_cycle_through, "no cycle through all maximum-degree vertices");
      return c;
    });
    report.instances_per_n[n] = graphs.size();
    report.instances += graphs.size();
    for (const auto& c : found) {
      if (c) report.counterexamples.push_back(*c);
    }
  }
  report.details["outside_hypothesis"] = outside_hypothesis;
  report.wall_seconds = clock.seconds();
  report.settle();
  return report;
}

json default_campaign() {
  return json{{"workers", 1},
              {"allow_large", false},
              {"checks",
               json::array({
                   {{"claim", "hamiltonicity-threshold"}, {"k", 3}},
                   {{"claim", "hamiltonicity-threshold"}, {"k", 4}},
                   {{"claim", "characterization"}, {"k", 3}},
                   {{"claim", "characterization"}, {"k", 4}},
                   {{"claim", "hampath-threshold"}, {"k", 3}},
                   {{"claim", "hampath-counterexamples"}},
                   {{"claim", "jackson-spot"}, {"k", 3}, {"n_max", 9}},
                   {{"claim", "hilbig-spot"}},
                   {{"claim", "max-degree-cycle"}, {"n_max", 8}},
               })}};
}

namespace {

template <typename T>
T field(const json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

int required_int(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("check '") + obj.value("claim", "?") + "' needs '" + key + "'");
  return field<int>(obj, key, 0);
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
  }
}

VerificationReport run_check(const json& entry, CheckOptions options) {
  if (!entry.is_object()) throw ConfigError("each check must be an object");
  check_keys(entry, {"claim", "k", "n_max", "exceptions"}, "check");
  const std::string claim = field<std::string>(entry, "claim", "");
  if (entry.contains("exceptions")) {
    std::vector<KnownException> list;
    for (const auto& name : field<std::vector<std::string>>(entry, "exceptions", {})) list.push_back(known_exception(name));
    options.exceptions = std::move(list);
  }
  if (claim == "hamiltonicity-threshold") return verify_hamiltonicity_threshold(required_int(entry, "k"), options);
  if (claim == "characterization" || claim == "nonhamiltonian-characterization-even" ||
      claim == "nonhamiltonian-characterization-odd") {
    return verify_characterization(required_int(entry, "k"), options);
  }
  if (claim == "hampath-threshold") return verify_hampath_threshold(required_int(entry, "k"), options);
  if (claim == "hampath-counterexamples") return verify_hampath_counterexamples(options);
  if (claim == "jackson-spot") return verify_jackson_spot(required_int(entry, "k"), required_int(entry, "n_max"), options);
  if (claim == "hilbig-spot") return verify_hilbig_spot(options);
  if (claim == "max-degree-cycle") return verify_cycle_through_max_degree(required_int(entry, "n_max"), options);
  throw ConfigError("unknown claim '" + claim + "'");
}

std::string side_file_name(const VerificationReport& r) {
  std::string name = r.claim;
  if (r.parameters.contains("k") && r.parameters["k"].is_number_integer()) {
    name += "-k" + std::to_string(r.parameters["k"].get<int>());
  }
  return name + ".g6";
}

void write_outputs(const json& config, const CampaignOutcome& outcome) {
  if (config.contains("graph6_dir")) {
    const std::filesystem::path dir = field<std::string>(config, "graph6_dir", "");
    std::filesystem::create_directories(dir);
    for (const VerificationReport& r : outcome.reports) {
      std::ofstream out(dir / side_file_name(r));
      for (const Counterexample& c : r.counterexamples) out << c.graph6 << '\n';
      for (const ExceptionMatch& e : r.exceptions_matched) out << e.graph6 << '\n';
      if (!out) throw std::runtime_error("cannot write " + (dir / side_file_name(r)).string());
    }
  }
  if (config.contains("report")) {
    const std::filesystem::path path = field<std::string>(config, "report", "");
    json doc{{"exit_code", outcome.exit_code}, {"reports", json::array()}};
    if (outcome.error) doc["error"] = *outcome.error;
    for (const VerificationReport& r : outcome.reports) doc["reports"].push_back(to_json(r));
    std::ofstream out(path);
    out << doc.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + path.string());
  }
}

}  // namespace

CampaignOutcome run_campaign(const json& config) {
  CampaignOutcome outcome;
  try {
    if (!config.is_object()) throw ConfigError("campaign config must be a JSON object");
    check_keys(config, {"workers", "allow_large", "report", "graph6_dir", "checks"}, "campaign config");
    CheckOptions options;
    options.workers = field<int>(config, "workers", 1);
    options.allow_large = field<bool>(config, "allow_large", false);
    if (options.workers < 1) throw ConfigError("workers must be >= 1");
    const json checks = config.contains("checks") ? config.at("checks") : default_campaign().at("checks");
    if (!checks.is_array()) throw ConfigError("'checks' must be an array");
    for (const json& entry : checks) outcome.reports.push_back(run_check(entry, options));
    const bool refuted = std::any_of(outcome.reports.begin(), outcome.reports.end(),
                                     [](const VerificationReport& r) { return r.verdict == Verdict::refuted; });
    outcome.exit_code = refuted ? 1 : 0;
  } catch (const std::exception& e) {
    outcome.exit_code = 2;
    outcome.error = e.what();
  }
  try {
    write_outputs(config, outcome);
  } catch (const std::exception& e) {
    outcome.exit_code = 2;
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace hamreg
