#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamreg/graph.hpp"

namespace hamreg {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verdict { verified, refuted, verified_with_known_exceptions };

std::string to_string(Verdict v);

// What a counterexample violates; reverify() re-runs exactly this predicate.
enum class Violation {
  not_hamiltonian,          // expected a Hamiltonian cycle
  no_hamiltonian_path,      // expected a Hamiltonian path
  unexpected_hamiltonian,   // expected no Hamiltonian cycle
  unexpected_path,          // expected no Hamiltonian path
  outside_family,           // non-Hamiltonian, not a family member, not a declared exception
  not_regular,
  disconnected,
  wrong_order,
  membership_mismatch,      // decider disagrees with the generator's parameters
  shortcut_missed,          // cut vertex with 3 components expected
  no_cycle_through,         // no cycle through all maximum-degree vertices
};

std::string to_string(Violation v);

struct Counterexample {
  std::string graph6;
  Violation violation = Violation::not_hamiltonian;
  std::string reason;
  int k = 0;  // expected degree / order where the violation refers to one
  int n = 0;
};

// True when decoding the graph6 string and re-running the violated predicate
// reproduces the violation.
bool reverify(const Counterexample& c);

struct ExceptionMatch {
  std::string name;
  std::string graph6;
  std::string justification;
};

// A graph allowed to violate a claim, matched up to isomorphism.
struct KnownException {
  std::string name;
  Graph graph;
  std::string justification;
};

// Looks up "Petersen" or "PetersenPrime"; throws ConfigError otherwise.
KnownException known_exception(const std::string& name);

struct VerificationReport {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  std::uint64_t instances = 0;
  std::map<int, std::uint64_t> instances_per_n;
  std::vector<Counterexample> counterexamples;
  std::vector<ExceptionMatch> exceptions_matched;
  double wall_seconds = 0.0;
  Verdict verdict = Verdict::verified;
  nlohmann::json details = nlohmann::json::object();

  // verified iff no counterexamples and no exceptions; refuted iff any
  // counterexample.
  void settle();
};

nlohmann::json to_json(const VerificationReport& r);

struct CheckOptions {
  int workers = 1;
  // Lifts the default enumeration envelope (e.g. k=5 exhaustive
  // characterization at n=14, or cycle-through sweeps beyond n=8).
  bool allow_large = false;
  // Declared exceptions; std::nullopt means the check's default set.
  std::optional<std::vector<KnownException>> exceptions;
};

// Every connected k-regular graph on k+1..2k+2 vertices has a Hamiltonian
// cycle.
VerificationReport verify_hamiltonicity_threshold(int k, const CheckOptions& options = {});

// At n = 2k+3 (k even) or 2k+4 (k odd): the non-Hamiltonian connected
// k-regular graphs are exactly the F-family (even) or H-family (odd)
// members, up to declared exceptions (Petersen by default for k=3). Both
// inclusions are reported under details.forward / details.reverse. The
// exhaustive reverse direction needs allow_large for k >= 5; without it k=5
// runs the forward direction only.
VerificationReport verify_characterization(int k, const CheckOptions& options = {});

// Every connected k-regular graph on at most 3k+3 vertices has a Hamiltonian
// path. Exhaustive where the enumeration envelope allows, constructed
// samples (circulants, generalized constructions) above it.
VerificationReport verify_hampath_threshold(int k, const CheckOptions& options = {});

// The no-path constructions for k in {6, 8} (even) and {5, 7} (odd).
VerificationReport verify_hampath_counterexamples(const CheckOptions& options = {});

// 2-connected k-regular graphs on at most n_max <= 3k vertices are
// Hamiltonian; no exceptions by default.
VerificationReport verify_jackson_spot(int k, int n_max, const CheckOptions& options = {});

// 2-connected cubic graphs on at most 12 vertices: the non-Hamiltonian ones
// are exactly the declared exceptions (Petersen and PetersenPrime).
VerificationReport verify_hilbig_spot(const CheckOptions& options = {});

// Every 2-connected graph with n <= min(n_max, 3*maxdeg - 2) has a cycle
// through all of its maximum-degree vertices. n_max <= 8 by default, up to
// 10 with allow_large.
VerificationReport verify_cycle_through_max_degree(int n_max, const CheckOptions& options = {});

struct CampaignOutcome {
  std::vector<VerificationReport> reports;
  int exit_code = 0;  // 0 verified, 1 unexpected counterexample, 2 config/runtime error
  std::optional<std::string> error;
};

// Config schema:
// {
//   "workers": 1, "allow_large": false,
//   "report": "reports.json",          // optional output path
//   "graph6_dir": "g6",                // optional side files
//   "checks": [ {"claim": "hamiltonicity-threshold", "k": 3},
//               {"claim": "characterization", "k": 3, "exceptions": ["Petersen"]},
//               {"claim": "hampath-threshold", "k": 3},
//               {"claim": "hampath-counterexamples"},
//               {"claim": "jackson-spot", "k": 3, "n_max": 9},
//               {"claim": "hilbig-spot"},
//               {"claim": "max-degree-cycle", "n_max": 8} ]
// }
// Omitting "checks" runs default_campaign()'s list.
nlohmann::json default_campaign();
CampaignOutcome run_campaign(const nlohmann::json& config);

}  // namespace hamreg
