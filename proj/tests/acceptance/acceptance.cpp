// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamreg/canonical.hpp"
#include "hamreg/construct.hpp"
#include "hamreg/enumerate.hpp"
#include "hamreg/graph6.hpp"
#include "hamreg/hamilton.hpp"
#include "hamreg/harness.hpp"
#include "hamreg/structure.hpp"
#include "oracles.hpp"

using namespace hamreg;

namespace {

// Wall-clock budgets in seconds.
constexpr double kThresholdBudget = 300;
constexpr double kEvenCharacterizationBudget = 1800;
constexpr double kOddCharacterizationBudget = 120;
constexpr double kHampathBudget = 600;
constexpr double kNoPathBudget = 600;  // each construction
constexpr int kEngineTrials = 1000;
constexpr int kEngineMaxOrder = 18;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [failed: " << what << "]";
    }
  }
};

// Graphs seen by criteria 1-8, for the round-trip half of criterion 10.
std::vector<Graph> touched;

void touch(const Graph& g) { touched.push_back(g); }
void touch(const std::vector<Graph>& gs) { touched.insert(touched.end(), gs.begin(), gs.end()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SolverOptions engine(Engine e) {
  SolverOptions o;
  o.engine = e;
  return o;
}

bool within_budget(Outcome& out, double elapsed, double budget) {
  out.note << " " << elapsed << "s/" << budget << "s";
  out.require(elapsed <= budget, "time budget");
  return elapsed <= budget;
}

std::size_t oracle_count(int k, int n) { return oracle::naive_connected_regular(k, n).size(); }

void threshold(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k : {3, 4}) {
    const VerificationReport r = verify_hamiltonicity_threshold(k);
    out.require(r.verdict == Verdict::verified && r.counterexamples.empty(), "k=" + std::to_string(k) + " verdict");
    for (int n = k + 1; n <= 2 * k + 2; ++n) {
      if ((k * n) % 2) continue;
      const auto it = r.instances_per_n.find(n);
      const std::uint64_t got = it == r.instances_per_n.end() ? 0 : it->second;
      out.require(got == oracle_count(k, n), "count k=" + std::to_string(k) + " n=" + std::to_string(n));
      touch(enumerate_connected_k_regular({.k = k, .n = n}).graphs);
    }
    out.note << " k=" << k << ":" << r.instances << " graphs";
  }
  within_budget(out, seconds_since(t0), kThresholdBudget);
}

// Non-Hamiltonian graphs in the naive oracle's list, by plain DFS.
std::vector<Graph> oracle_non_hamiltonian(const std::vector<Graph>& gs) {
  std::vector<Graph> out;
  for (const Graph& g : gs) {
    if (!oracle::has_hamiltonian_cycle(g)) out.push_back(g);
  }
  return out;
}

void characterization_even(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = verify_characterization(4);
  const double elapsed = seconds_since(t0);
  const auto& d = r.details;
  out.require(r.verdict == Verdict::verified, "verdict " + to_string(r.verdict));
  out.require(d["forward"]["holds"] == true && d["reverse"]["holds"] == true, "both inclusions");
  out.require(d["reverse"]["non_hamiltonian"] == 1 && d["reverse"]["family_members"] == 1, "family size 1");

  const auto naive = oracle::naive_connected_regular(4, 11);
  const auto naive_bad = oracle_non_hamiltonian(naive);
  out.require(r.instances == naive.size(), "oracle count");
  out.require(naive_bad.size() == 1 && oracle::isomorphic(naive_bad.front(), family_f(2, 2)), "oracle family");
  out.note << " graphs=" << r.instances << " oracle=" << naive.size() << " non-hamiltonian=" << naive_bad.size();
  touch(enumerate_connected_k_regular({.k = 4, .n = 11}).graphs);
  touch(family_f(2, 2));
  within_budget(out, elapsed, kEvenCharacterizationBudget);
}

void characterization_odd(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = verify_characterization(3);
  const double elapsed = seconds_since(t0);
  out.require(r.verdict == Verdict::verified_with_known_exceptions, "verdict " + to_string(r.verdict));
  out.require(r.exceptions_matched.size() == 1 && r.exceptions_matched.front().name == "Petersen",
              "Petersen declared exception");
  out.require(r.details["reverse"]["holds"] == true && r.details["forward"]["holds"] == true, "both inclusions");

  const auto naive = oracle::naive_connected_regular(3, 10);
  const auto naive_bad = oracle_non_hamiltonian(naive);
  out.require(r.instances == naive.size(), "oracle count");
  int petersen_like = 0;
  int family_like = 0;
  for (const Graph& g : naive_bad) {
    petersen_like += oracle::isomorphic(g, petersen());
    family_like += oracle::isomorphic(g, family_h(1, 2));
  }
  out.require(naive_bad.size() == 2 && petersen_like == 1 && family_like == 1, "oracle non-hamiltonian set");
  out.note << " graphs=" << r.instances << " oracle=" << naive.size();
  touch(enumerate_connected_k_regular({.k = 3, .n = 10}).graphs);
  touch(petersen());
  touch(family_h(1, 2));
  within_budget(out, elapsed, kOddCharacterizationBudget);
}

void family_soundness(Outcome& out) {
  int checked = 0;
  std::vector<std::string> failed;
  auto check = [&](const Graph& g, int k, const std::string& name) {
    touch(g);
    ++checked;
    const int cuts = cut_vertices(g).size();
    const bool ok = is_connected(g) && is_k_regular(g, k) && cuts == 1 &&
                    !hamiltonian_cycle(g, engine(Engine::subset_dp)).has_value();
    if (!ok) failed.push_back(name + "(cut vertices " + std::to_string(cuts) + ")");
  };
  for (int r = 2; 4 * r + 3 <= 23; ++r)
    for (int t = 2; t <= 2 * r - 2; t += 2) check(family_f(r, t), 2 * r, "F(" + std::to_string(r) + "," + std::to_string(t) + ")");
  for (int r = 1; 4 * r + 6 <= 22; ++r)
    for (int t = 2; t <= 2 * r; t += 2) check(family_h(r, t), 2 * r + 1, "H(" + std::to_string(r) + "," + std::to_string(t) + ")");
  out.note << " " << checked - static_cast<int>(failed.size()) << "/" << checked << " members";
  for (const auto& f : failed) out.note << " " << f;
  out.require(failed.empty(), "every member");
}

void hampath_threshold(Outcome& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport r = verify_hampath_threshold(3);
  const double elapsed = seconds_since(t0);
  out.require(r.verdict == Verdict::verified && r.counterexamples.empty(), "verdict");
  out.require(r.details["exhaustive_max_n"] == 12, "exhaustive to 12");
  out.require(r.details["includes_petersen"] == true && r.details["includes_petersen_prime"] == true, "P and P'");
  for (int n = 4; n <= 10; n += 2) {
    out.require(r.instances_per_n.at(n) == oracle_count(3, n), "oracle count n=" + std::to_string(n));
  }
  // The path claim itself, independently, on the enumerated n=12 graphs.
  const auto twelve = enumerate_connected_k_regular({.k = 3, .n = 12}).graphs;
  bool all_paths = true;
  for (const Graph& g : twelve) all_paths = all_paths && oracle::has_hamiltonian_path(g);
  out.require(all_paths && r.instances_per_n.at(12) == twelve.size(), "n=12 paths");
  touch(twelve);
  touch(petersen_prime());
  out.note << " graphs=" << r.instances;
  within_budget(out, elapsed, kHampathBudget);
}

void no_path(Outcome& out) {
  struct Case {
    std::string name;
    Graph g;
    int k;
    int n;
  };
  for (const Case& c : {Case{"no_path_h(5)", no_path_h(5), 5, 20}, Case{"no_path_f(6)", no_path_f(6), 6, 22}}) {
    touch(c.g);
    const auto t0 = std::chrono::steady_clock::now();
    out.require(c.g.order() == c.n && is_connected(c.g) && is_k_regular(c.g, c.k), c.name + " shape");
    bool shortcut = false;
    for (Vertex v = 0; v < c.g.order(); ++v) shortcut = shortcut || components_after_deletion(c.g, v).size() >= 3;
    out.require(shortcut, c.name + " three-component cut");
    out.require(!hamiltonian_path(c.g, engine(Engine::backtracking)).has_value(), c.name + " path found");
    out.note << " " << c.name << ":";
    within_budget(out, seconds_since(t0), kNoPathBudget);
  }
}

void spot_checks(Outcome& out) {
  const VerificationReport j = verify_jackson_spot(3, 9);
  out.require(j.verdict == Verdict::verified, "jackson verdict");
  const VerificationReport h = verify_hilbig_spot();
  out.require(h.verdict == Verdict::verified_with_known_exceptions && h.details["exception_set_exact"] == true,
              "hilbig verdict");
  std::set<std::string> names;
  for (const auto& m : h.exceptions_matched) names.insert(m.name);
  out.require(names == std::set<std::string>{"Petersen", "PetersenPrime"}, "exception names");

  // Independent pass: deletion-oracle 2-connectivity and DFS Hamiltonicity.
  std::vector<Graph> bad;
  int two_connected = 0;
  for (int n = 4; n <= 12; n += 2) {
    const auto gs = enumerate_connected_k_regular({.k = 3, .n = n}).graphs;
    touch(gs);
    for (const Graph& g : gs) {
      if (!oracle::cut_vertices_by_deletion(g).empty()) continue;
      ++two_connected;
      if (!oracle::has_hamiltonian_cycle(g)) {
        out.require(n > 9, "non-hamiltonian at n<=9");
        bad.push_back(g);
      }
    }
  }
  const bool exact = bad.size() == 2 &&
                     ((oracle::isomorphic(bad[0], petersen()) && oracle::isomorphic(bad[1], petersen_prime())) ||
                      (oracle::isomorphic(bad[1], petersen()) && oracle::isomorphic(bad[0], petersen_prime())));
  out.require(exact, "oracle exception set");
  out.require(static_cast<std::uint64_t>(two_connected) == h.instances, "2-connected count");
  out.note << " 2-connected=" << two_connected << " non-hamiltonian=" << bad.size();
}

void generalized(Outcome& out) {
  for (auto [k, n] : {std::pair{4, 13}, {4, 15}, {4, 17}, {3, 12}, {3, 14}, {3, 16}}) {
    const Graph g = generalized_no_hamilton(k, n);
    touch(g);
    const bool ok = g.order() == n && is_connected(g) && is_k_regular(g, k) && !hamiltonian_cycle(g).has_value();
    out.require(ok, "(" + std::to_string(k) + "," + std::to_string(n) + ")");
  }
  out.note << " 6 graphs";
}

void engines(Outcome& out) {
  std::mt19937_64 rng(20240607);
  int agree = 0;
  int yes = 0;
  for (int trial = 0; trial < kEngineTrials; ++trial) {
    const int n = 1 + trial % kEngineMaxOrder;
    // Densities from very sparse to complete, cycled per trial.
    const double p = 0.05 + 0.95 * static_cast<double>(trial % 20) / 19.0;
    const Graph g = oracle::random_graph(rng, n, p);
    const bool c1 = hamiltonian_cycle(g, engine(Engine::subset_dp)).has_value();
    const bool c2 = hamiltonian_cycle(g, engine(Engine::backtracking)).has_value();
    const bool p1 = hamiltonian_path(g, engine(Engine::subset_dp)).has_value();
    const bool p2 = hamiltonian_path(g, engine(Engine::backtracking)).has_value();
    agree += c1 == c2 && p1 == p2;
    yes += c1;
  }
  out.note << " " << agree << "/" << kEngineTrials << " agree, " << yes << " hamiltonian";
  out.require(agree == kEngineTrials, "agreement");
}

nlohmann::json strip_timing(nlohmann::json reports) {
  for (auto& r : reports) r.erase("wall_seconds");
  return reports;
}

void determinism(Outcome& out) {
  auto stream = [] {
    std::string s;
    for (auto [k, n] : {std::pair{3, 12}, {4, 10}, {4, 11}}) {
      for (const Graph& g : enumerate_connected_k_regular({.k = k, .n = n, .workers = 2}).graphs) s += graph6_encode(g) + "\n";
    }
    for (const Graph& g : {family_f(3, 2), family_h(2, 2), no_path_h(5), no_path_f(6), generalized_no_hamilton(4, 15),
                           petersen_prime()})
      s += graph6_encode(g) + "\n";
    return s;
  };
  out.require(stream() == stream(), "generator and enumeration streams");

  auto campaign = [] {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : run_campaign(default_campaign()).reports) reports.push_back(to_json(r));
    return strip_timing(reports).dump();
  };
  out.require(campaign() == campaign(), "campaign reports");

  std::size_t bad = 0;
  for (const Graph& g : touched) bad += graph6_decode(graph6_encode(g)) != g;
  out.require(bad == 0, "graph6 round trip");
  out.note << " round-tripped " << touched.size() << " graphs";
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<void(Outcome&)>>> criteria{
      {1, threshold},        {2, characterization_even}, {3, characterization_odd}, {4, family_soundness},
      {5, hampath_threshold}, {6, no_path},               {7, spot_checks},          {8, generalized},
      {9, engines},          {10, determinism}};
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    failures += !out.pass;
    std::cout << "criterion " << id << ": " << (out.pass ? "PASS" : "FAIL") << out.note.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " of 10 criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
