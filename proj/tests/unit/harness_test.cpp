#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "hamreg/construct.hpp"
#include "hamreg/enumerate.hpp"
#include "hamreg/graph6.hpp"
#include "hamreg/harness.hpp"

using namespace hamreg;
using nlohmann::json;

namespace {

json without_timing(json report) {
  report.erase("wall_seconds");
  return report;
}

}  // namespace

TEST(Harness, ThresholdCubic) {
  const auto r = verify_hamiltonicity_threshold(3);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_EQ(r.instances_per_n.at(4), 1U);
  EXPECT_EQ(r.instances_per_n.at(6), 2U);
  EXPECT_EQ(r.instances_per_n.at(8), 5U);
  EXPECT_EQ(r.instances, 8U);
}

TEST(Harness, ThresholdTwoRegular) {
  const auto r = verify_hamiltonicity_threshold(2);
  EXPECT_EQ(r.verdict, Verdict::verified);
  for (const auto& [n, count] : r.instances_per_n) EXPECT_EQ(count, 1U) << n;
}

TEST(Harness, CharacterizationCubicWithPetersen) {
  const auto r = verify_characterization(3);
  EXPECT_EQ(r.claim, "nonhamiltonian-characterization-odd");
  EXPECT_EQ(r.verdict, Verdict::verified_with_known_exceptions);
  ASSERT_EQ(r.exceptions_matched.size(), 1U);
  EXPECT_EQ(r.exceptions_matched[0].name, "Petersen");
  EXPECT_EQ(r.instances, 19U);
  EXPECT_TRUE(r.details["forward"]["holds"].get<bool>());
  EXPECT_TRUE(r.details["reverse"]["holds"].get<bool>());
  EXPECT_EQ(r.details["reverse"]["non_hamiltonian"].get<int>(), 2);
}

TEST(Harness, CharacterizationWithoutExceptionRefutes) {
  CheckOptions o;
  o.exceptions = std::vector<KnownException>{};
  const auto r = verify_characterization(3, o);
  EXPECT_EQ(r.verdict, Verdict::refuted);
  ASSERT_EQ(r.counterexamples.size(), 1U);
  EXPECT_EQ(r.counterexamples[0].graph6, graph6_encode(graph6_decode(r.counterexamples[0].graph6)));
  EXPECT_TRUE(reverify(r.counterexamples[0]));
}

TEST(Harness, CharacterizationQuarticExact) {
  const auto r = verify_characterization(4);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_EQ(r.details["reverse"]["family_members"].get<int>(), 1);
  EXPECT_EQ(r.details["reverse"]["non_hamiltonian"].get<int>(), 1);
}

TEST(Harness, CharacterizationQuinticForwardOnly) {
  const auto r = verify_characterization(5);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_TRUE(r.details["reverse"].contains("skipped"));
  EXPECT_TRUE(r.details["forward"]["holds"].get<bool>());
  EXPECT_THROW(verify_characterization(6), EnvelopeError);
}

TEST(Harness, HampathThreshold) {
  const auto r = verify_hampath_threshold(3);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_TRUE(r.details["includes_petersen"].get<bool>());
  EXPECT_TRUE(r.details["includes_petersen_prime"].get<bool>());
  EXPECT_EQ(r.instances_per_n.at(12), 85U);
  const auto four = verify_hampath_threshold(4, {});
  EXPECT_EQ(four.verdict, Verdict::verified);
  EXPECT_FALSE(four.details["sampled"].empty());
}

TEST(Harness, HampathCounterexamples) {
  const auto r = verify_hampath_counterexamples();
  EXPECT_EQ(r.verdict, Verdict::verified);
  ASSERT_EQ(r.details["instances"].size(), 4U);
  for (const auto& inst : r.details["instances"]) {
    EXPECT_TRUE(inst["shortcut_fires"].get<bool>());
    EXPECT_FALSE(inst["hamiltonian_path"].get<bool>());
  }
}

TEST(Harness, JacksonAndHilbig) {
  EXPECT_EQ(verify_jackson_spot(3, 9).verdict, Verdict::verified);
  EXPECT_THROW(verify_jackson_spot(3, 10), std::invalid_argument);
  const auto h = verify_hilbig_spot();
  EXPECT_EQ(h.verdict, Verdict::verified_with_known_exceptions);
  EXPECT_TRUE(h.details["exception_set_exact"].get<bool>());
  ASSERT_EQ(h.exceptions_matched.size(), 2U);
}

TEST(Harness, CycleThroughSweep) {
  const auto r = verify_cycle_through_max_degree(7);
  EXPECT_EQ(r.verdict, Verdict::verified);
  EXPECT_GT(r.instances, 0U);
  EXPECT_THROW(verify_cycle_through_max_degree(9), EnvelopeError);
  EXPECT_THROW(verify_cycle_through_max_degree(11), EnvelopeError);
}

TEST(Harness, VerdictRule) {
  VerificationReport r;
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::verified);
  r.exceptions_matched.push_back({"Petersen", "IheA@GUAo", ""});
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::verified_with_known_exceptions);
  r.counterexamples.push_back({"IheA@GUAo", Violation::not_hamiltonian, "x", 3, 10});
  r.settle();
  EXPECT_EQ(r.verdict, Verdict::refuted);
  EXPECT_TRUE(reverify(r.counterexamples[0]));
  EXPECT_FALSE(reverify({"C~", Violation::not_hamiltonian, "", 3, 4}));
  EXPECT_FALSE(reverify({"junk\x01", Violation::not_hamiltonian, "", 3, 4}));
}

TEST(Harness, ReportJsonSchema) {
  const json j = to_json(verify_hilbig_spot());
  for (const char* key : {"claim", "parameters", "instances", "instances_per_n", "counterexamples", "exceptions_matched",
                          "wall_seconds", "verdict", "details"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["verdict"], "verified-with-known-exceptions");
}

TEST(Campaign, DefaultConfigPasses) {
  const auto out = run_campaign(json::object());
  EXPECT_EQ(out.exit_code, 0) << out.error.value_or("");
  EXPECT_EQ(out.reports.size(), default_campaign()["checks"].size());
}

TEST(Campaign, DisabledPetersenExceptionExitsOne) {
  const json config{{"checks", json::array({{{"claim", "characterization"}, {"k", 3}, {"exceptions", json::array()}}})}};
  const auto out = run_campaign(config);
  EXPECT_EQ(out.exit_code, 1);
  ASSERT_EQ(out.reports.size(), 1U);
  ASSERT_EQ(out.reports[0].counterexamples.size(), 1U);
  EXPECT_EQ(out.reports[0].counterexamples[0].graph6, graph6_encode(enumerate_connected_k_regular({3, 10, {Filter::two_connected, Filter::non_hamiltonian}}).graphs.at(0)));
}

TEST(Campaign, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_campaign({{"checks", json::array({{{"claim", "hamiltonicity-threshold"}, {"k", 9}}})}}).exit_code, 2);
  EXPECT_EQ(run_campaign({{"checks", json::array({{{"claim", "nope"}}})}}).exit_code, 2);
  EXPECT_EQ(run_campaign({{"checks", json::array({{{"claim", "jackson-spot"}, {"k", 3}}})}}).exit_code, 2);
  EXPECT_EQ(run_campaign({{"bogus", 1}}).exit_code, 2);
  EXPECT_EQ(run_campaign({{"workers", 0}}).exit_code, 2);
  EXPECT_EQ(run_campaign(json::array()).exit_code, 2);
  EXPECT_EQ(run_campaign({{"checks", json::array({{{"claim", "hilbig-spot"}, {"exceptions", {"Unknown"}}}})}}).exit_code, 2);
}

TEST(Campaign, WritesReportAndSideFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "hamreg_campaign_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const json config{{"report", (dir / "report.json").string()},
                    {"graph6_dir", (dir / "g6").string()},
                    {"checks", json::array({{{"claim", "hilbig-spot"}}})}};
  const auto out = run_campaign(config);
  ASSERT_EQ(out.exit_code, 0);
  std::ifstream report(dir / "report.json");
  const json doc = json::parse(report);
  EXPECT_EQ(doc["exit_code"], 0);
  EXPECT_EQ(doc["reports"][0]["claim"], "hilbig-spot");
  std::ifstream side(dir / "g6" / "hilbig-spot-k3.g6");
  std::string line;
  int lines = 0;
  while (std::getline(side, line)) {
    EXPECT_NO_THROW(graph6_decode(line));
    ++lines;
  }
  EXPECT_EQ(lines, 2);
}

TEST(Campaign, ReportsDeterministicApartFromTiming) {
  const json config{{"checks", json::array({{{"claim", "characterization"}, {"k", 3}}, {{"claim", "hampath-threshold"}, {"k", 3}}})}};
  const auto a = run_campaign(config);
  json b_config = config;
  b_config["workers"] = 3;
  const auto b = run_campaign(b_config);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    EXPECT_EQ(without_timing(to_json(a.reports[i])), without_timing(to_json(b.reports[i])));
  }
}
