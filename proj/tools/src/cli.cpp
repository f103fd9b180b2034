#include "hamreg_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hamreg/canonical.hpp"
#include "hamreg/construct.hpp"
#include "hamreg/enumerate.hpp"
#include "hamreg/graph6.hpp"
#include "hamreg/hamilton.hpp"
#include "hamreg/harness.hpp"
#include "hamreg/structure.hpp"

namespace hamreg::cli {

namespace {

using json = nlohmann::json;

constexpr int kUsageError = 2;

json vertex_list(const std::vector<Vertex>& vs) { return json(vs); }

json profile_json(const DegreeProfile& p) {
  std::map<int, int> counts;
  for (int d : p.degrees) ++counts[d];
  json by_degree = json::object();
  for (const auto& [d, c] : counts) by_degree[std::to_string(d)] = c;
  return {{"min", p.min_degree},
          {"max", p.max_degree},
          {"regular", p.regular_of ? json(*p.regular_of) : json(nullptr)},
          {"counts", by_degree}};
}

json edges_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return edges;
}

Engine engine_from_string(const std::string& name) {
  if (name == "auto") return Engine::automatic;
  if (name == "dp") return Engine::subset_dp;
  if (name == "backtracking") return Engine::backtracking;
  throw std::invalid_argument("unknown engine '" + name + "'");
}

json membership_json(const std::optional<FamilyMembership>& m) {
  if (!m) return nullptr;
  return {{"r", m->r}, {"t", m->t}};
}

json check_graph(const Graph& g, const SolverOptions& solver) {
  json cut = json::array();
  for (Vertex v : cut_vertices(g)) cut.push_back(v);
  const auto cycle = hamiltonian_cycle(g, solver);
  const auto path = hamiltonian_path(g, solver);
  json out{{"graph6", graph6_encode(g)},
           {"n", g.order()},
           {"edges", g.edge_count()},
           {"degrees", profile_json(degree_profile(g))},
           {"connected", is_connected(g)},
           {"two_connected", is_two_connected(g)},
           {"cut_vertices", cut},
           {"hamiltonian_cycle", cycle ? vertex_list(cycle->order) : json(nullptr)},
           {"hamiltonian_path", path ? vertex_list(path->order) : json(nullptr)},
           {"family_f", membership_json(is_family_f_member(g))},
           {"family_h", membership_json(is_family_h_member(g))}};
  if (const auto v = family_h_variant(g)) out["family_h_variant"] = to_string(*v);
  return out;
}

// Graph6 lines from positional arguments, else from the input stream.
// Bad lines go to err; returns false if any line was bad.
bool read_graphs(const std::vector<std::string>& given, std::istream& in, std::ostream& err, std::vector<Graph>& graphs) {
  Graph6Stream stream;
  if (!given.empty()) {
    std::ostringstream joined;
    for (const std::string& line : given) joined << line << '\n';
    std::istringstream src(joined.str());
    stream = read_graph6(src);
  } else {
    stream = read_graph6(in);
  }
  for (const Graph6Diagnostic& d : stream.diagnostics) err << "line " << d.line_number << ": " << d.message << '\n';
  graphs = std::move(stream.graphs);
  return stream.diagnostics.empty();
}

struct CatalogEntry {
  std::string family;
  json params;
  Graph graph;
};

std::vector<CatalogEntry> catalog(int max_order) {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& family, json params, const Graph& g) {
    if (g.order() <= max_order) out.push_back({family, std::move(params), g});
  };
  add("Petersen", json::object(), petersen());
  add("PetersenPrime", json::object(), petersen_prime());
  for (int r = 2; 2 * r + 1 <= max_order; ++r) {
    for (int t = 2; t <= 2 * r - 2; t += 2) {
      const json p{{"r", r}, {"t", t}};
      add("F_rt", p, f_rt(r, t));
      add("Fprime_rt", p, f_prime_rt(r, t));
      if (4 * r + 3 <= max_order) add("FamilyF", p, family_f(r, t));
    }
  }
  for (int r = 1; 2 * r + 3 <= max_order; ++r) {
    for (int t = 2; t <= 2 * r; t += 2) {
      const json p{{"r", r}, {"t", t}};
      add("H_rt", p, h_rt(r, t));
      add("Hprime_rt", p, h_prime_rt(r, t));
      if (4 * r + 6 <= max_order) add("FamilyH", p, family_h(r, t));
    }
  }
  for (int k = 6; 3 * k + 4 <= max_order; k += 2) add("NoPathF", {{"k", k}}, no_path_f(k));
  for (int k = 5; 3 * k + 5 <= max_order; k += 2) add("NoPathH", {{"k", k}}, no_path_h(k));
  for (int k = 3; 2 * k + 3 <= max_order; ++k) {
    const bool even = k % 2 == 0;
    for (int n = even ? 2 * k + 3 : 2 * k + 4; n <= max_order; n += 2) {
      try {
        add(even ? "GeneralizedF" : "GeneralizedH", {{"k", k}, {"n", n}}, generalized_no_hamilton(k, n));
      } catch (const ParameterError&) {
        // no circulant base of this order and degree
      }
    }
  }
  return out;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw std::invalid_argument("expected {\"n\": ..., \"edges\": [[u, v], ...]}");
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("each edge must be a pair [u, v]");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph::build(n, edges);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hamiltonicity toolkit for connected regular graphs", "hamreg"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build one family member and print it as graph6");
  std::string family_name;
  FamilyParams params;
  std::string variant_text;
  std::vector<int> connections;
  construct->add_option("family", family_name, "Family name (FamilyF, FamilyH, NoPathF, Petersen, Circulant, ...)")->required();
  construct->add_option("-r", params.r, "Parameter r");
  construct->add_option("-t", params.t, "Parameter t (even)");
  construct->add_option("-k", params.k, "Degree k");
  construct->add_option("-n", params.n, "Order n");
  construct->add_option("--connections", connections, "Circulant connection set")->delimiter(',');
  construct->add_option("--variant", variant_text, "H' variant, e.g. \"paths=3,2;cycles=\"");
  bool construct_json = false;
  construct->add_flag("--json", construct_json, "Print parameters, graph6 and degree profile as JSON");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Emit every family member up to an order, with a manifest");
  int catalog_max = 24;
  std::string manifest_path;
  bool catalog_json = false;
  cat->add_option("--max-order", catalog_max, "Largest order to include")->check(CLI::Range(1, kMaxVertices));
  cat->add_option("--manifest", manifest_path, "Write the JSON manifest to this file");
  cat->add_flag("--json", catalog_json, "Print the manifest instead of graph6 lines");

  // check
  auto* check = app.add_subcommand("check", "Report properties of graph6 graphs (stdin or arguments)");
  std::vector<std::string> check_inputs;
  std::string engine_name = "auto";
  check->add_option("graph6", check_inputs, "graph6 strings; stdin when omitted");
  check->add_option("--engine", engine_name, "auto, dp or backtracking")->check(CLI::IsMember({"auto", "dp", "backtracking"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream connected k-regular graphs as graph6");
  EnumerationTask task;
  std::vector<std::string> filter_names;
  std::size_t limit = 0;
  bool allow_large = false;
  bool count_only = false;
  enumerate->add_option("-k", task.k, "Degree")->required();
  enumerate->add_option("-n", task.n, "Order")->required();
  enumerate->add_option("--filter", filter_names,
                        "two-connected, cut-vertex, hamiltonian, non-hamiltonian, traceable, non-traceable");
  enumerate->add_option("--limit", limit, "Stop after this many graphs");
  enumerate->add_option("--workers", task.workers, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--allow-large", allow_large, "Permit orders beyond the default envelope");
  enumerate->add_flag("--count", count_only, "Print only the number of graphs");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  std::string config_path;
  std::string report_path;
  std::string graph6_dir;
  int verify_workers = 0;
  bool verify_large = false;
  verify->add_option("--config", config_path, "Campaign JSON; the default campaign when omitted");
  verify->add_option("--report", report_path, "Write the JSON report here");
  verify->add_option("--graph6-dir", graph6_dir, "Write counterexample/exception graph6 files here");
  verify->add_option("--workers", verify_workers, "Override worker count")->check(CLI::PositiveNumber);
  verify->add_flag("--allow-large", verify_large, "Lift the enumeration envelope");

  // encode / decode
  auto* encode = app.add_subcommand("encode", "JSON lines {\"n\":..,\"edges\":[[u,v],..]} on stdin to graph6");
  auto* decode = app.add_subcommand("decode", "graph6 (stdin or arguments) to JSON lines");
  std::vector<std::string> decode_inputs;
  decode->add_option("graph6", decode_inputs, "graph6 strings; stdin when omitted");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*construct) {
      params.family = family_from_string(family_name);
      params.connections = connections;
      if (!variant_text.empty()) params.variant = h_prime_variant_from_string(variant_text);
      const Graph g = build(params);
      if (construct_json) {
        out << json{{"family", family_name}, {"graph6", graph6_encode(g)}, {"n", g.order()}, {"degrees", profile_json(degree_profile(g))}}.dump()
            << '\n';
      } else {
        out << graph6_encode(g) << '\n';
      }
      return 0;
    }
    if (*cat) {
      json manifest = json::array();
      for (const CatalogEntry& e : catalog(catalog_max)) {
        const std::string g6 = graph6_encode(e.graph);
        manifest.push_back({{"family", e.family},
                            {"params", e.params},
                            {"graph6", g6},
                            {"n", e.graph.order()},
                            {"degrees", profile_json(degree_profile(e.graph))}});
        if (!catalog_json) out << g6 << '\n';
      }
      if (catalog_json) out << manifest.dump(2) << '\n';
      if (!manifest_path.empty()) {
        std::ofstream file(manifest_path);
        file << manifest.dump(2) << '\n';
        if (!file) {
          err << "cannot write " << manifest_path << '\n';
          return kUsageError;
        }
      }
      return 0;
    }
    if (*check) {
      SolverOptions solver;
      solver.engine = engine_from_string(engine_name);
      std::vector<Graph> graphs;
      const bool clean = read_graphs(check_inputs, in, err, graphs);
      for (const Graph& g : graphs) out << check_graph(g, solver).dump() << '\n';
      return clean ? 0 : kUsageError;
    }
    if (*enumerate) {
      for (const std::string& f : filter_names) task.filters.push_back(filter_from_string(f));
      if (limit > 0) task.limit = limit;
      task.enforce_envelope = !allow_large;
      const EnumerationResult result = enumerate_connected_k_regular(task);
      if (result.diagnostic) err << *result.diagnostic << '\n';
      if (count_only) {
        out << result.graphs.size() << '\n';
      } else {
        for (const Graph& g : result.graphs) out << graph6_encode(g) << '\n';
      }
      return 0;
    }
    if (*verify) {
      json config = json::object();
      if (!config_path.empty()) {
        std::ifstream file(config_path);
        if (!file) {
          err << "cannot read " << config_path << '\n';
          return kUsageError;
        }
        try {
          config = json::parse(file);
        } catch (const json::parse_error& e) {
          err << "invalid JSON in " << config_path << ": " << e.what() << '\n';
          return kUsageError;
        }
      }
      if (!config.is_object()) {
        err << "campaign config must be a JSON object\n";
        return kUsageError;
      }
      if (!report_path.empty()) config["report"] = report_path;
      if (!graph6_dir.empty()) config["graph6_dir"] = graph6_dir;
      if (verify_workers > 0) config["workers"] = verify_workers;
      if (verify_large) config["allow_large"] = true;
      const CampaignOutcome outcome = run_campaign(config);
      for (const VerificationReport& r : outcome.reports) {
        out << r.claim << ' ' << r.parameters.dump() << ": " << to_string(r.verdict) << " (" << r.instances << " instances, "
            << r.counterexamples.size() << " counterexamples, " << r.exceptions_matched.size() << " exceptions)\n";
        for (const Counterexample& c : r.counterexamples) out << "  counterexample " << c.graph6 << ": " << c.reason << '\n';
        for (const ExceptionMatch& e : r.exceptions_matched) out << "  exception " << e.name << ' ' << e.graph6 << '\n';
      }
      if (outcome.error) err << "error: " << *outcome.error << '\n';
      return outcome.exit_code;
    }
    if (*encode) {
      std::string line;
      int line_number = 0;
      bool clean = true;
      while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          out << graph6_encode(graph_from_json(json::parse(line))) << '\n';
        } catch (const std::exception& e) {
          err << "line " << line_number << ": " << e.what() << '\n';
          clean = false;
        }
      }
      return clean ? 0 : kUsageError;
    }
    if (*decode) {
      std::vector<Graph> graphs;
      const bool clean = read_graphs(decode_inputs, in, err, graphs);
      for (const Graph& g : graphs) out << json{{"n", g.order()}, {"edges", edges_json(g)}}.dump() << '\n';
      return clean ? 0 : kUsageError;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hamreg::cli
