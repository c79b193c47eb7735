#include <gtest/gtest.h>

#include <cmath>

#include "banproj/counterexamples.hpp"

namespace banproj {
namespace {

const ScenarioCheck& check(const ScenarioReport& r, const std::string& label) {
  for (const auto& c : r.checks) {
    if (c.label == label) return c;
  }
  throw std::out_of_range("no check " + label);
}

double computed(const ScenarioReport& r, const std::string& label) {
  return std::get<double>(check(r, label).computed);
}

TEST(Counterexamples, RegistryOrder) {
  const std::vector<std::string> expected{"prop2.2", "prop2.4", "prop2.7", "cor2.8",
                                          "thm3.1", "thm3.5-convexity", "thm3.5-cone"};
  EXPECT_EQ(scenario_ids(), expected);
  EXPECT_THROW(run_scenario("thm9.9"), UnknownScenario);
}

TEST(Counterexamples, RunAllOutcomes) {
  const auto reports = run_all();
  ASSERT_EQ(reports.size(), 7u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.p, 3.0);
    const bool expect_discrepancy = r.id == "thm3.5-cone";
    EXPECT_EQ(r.overall, expect_discrepancy ? Overall::discrepancy : Overall::reproduced) << r.id;
    EXPECT_FALSE(has_unexpected_discrepancy(r)) << r.id;
  }
  EXPECT_FALSE(has_unexpected_discrepancy(reports));
}

TEST(Counterexamples, HalfconeValues) {
  const auto r = run_scenario("prop2.2");
  EXPECT_NEAR(computed(r, "<J v, y>"), 0.0, 1e-12);
  EXPECT_NEAR(computed(r, "<J w, y>"), 0.0, 1e-12);
  EXPECT_NEAR(computed(r, "<J g, y>"), -14.0 * std::cbrt(4.0), 1e-9 * 22.22);
  const auto s = run_scenario("prop2.4");
  EXPECT_NEAR(computed(s, "<J g - psi, y>"), -14.0 * std::cbrt(4.0) + 13.9, 1e-9 * 8.4);
}

TEST(Counterexamples, ConeScenarioFlagsOnlyDocumentedChecks) {
  const auto r = run_scenario("thm3.5-cone");
  EXPECT_NEAR(computed(r, "<J u, y>"), (4.0 / 3.0) / std::cbrt(10.0 / 3.0), 1e-12);
  std::size_t failing = 0;
  for (const auto& c : r.checks) {
    if (!c.matches) {
      ++failing;
      EXPECT_TRUE(c.expected_discrepancy) << c.label;
    }
  }
  EXPECT_EQ(failing, 2u);
  EXPECT_TRUE(check(r, "<J g, y>").matches);
  ASSERT_FALSE(r.probes.empty());
  EXPECT_EQ(r.probes.back().verdict, Verdict::refuted);
}

TEST(Counterexamples, ChecksCarryTolerances) {
  for (const auto& r : run_all()) {
    for (const auto& c : r.checks) {
      EXPECT_GE(c.tolerance, 0.0);
      EXPECT_FALSE(c.label.empty());
    }
  }
}

}  // namespace
}  // namespace banproj
