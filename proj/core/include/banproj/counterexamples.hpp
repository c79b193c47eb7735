#pragma once

#include <string>
#include <variant>
#include <vector>

#include "banproj/convex_sets.hpp"
#include "banproj/inverse_probe.hpp"

namespace banproj {

/// A qualitative statement (an inequality, a membership, a probe verdict)
/// checked against the computed value rather than a closed form.
struct ClaimText {
  std::string text;
};

using CheckValue = std::variant<double, std::vector<double>>;
using ExpectedValue = std::variant<double, std::vector<double>, ClaimText>;

/// Numeric checks match when |computed - expected| <= tolerance * max(1, |expected|)
/// (max-norm for vectors): absolute near zero, relative elsewhere.
struct ScenarioCheck {
  std::string label;
  CheckValue computed;
  ExpectedValue expected;
  bool matches = false;
  double tolerance = 0.0;
  /// A known disagreement; reported, but not a failure of the run.
  bool expected_discrepancy = false;
};

using ScenarioInputValue = std::variant<double, PrimalVector, DualVector, ConvexSet>;

struct ScenarioInput {
  std::string name;
  ScenarioInputValue value;
};

enum class Overall { reproduced, discrepancy };

std::string_view to_string(Overall overall);

struct ScenarioReport {
  std::string id;
  double p = 3.0;
  std::vector<ScenarioInput> inputs;
  std::vector<ScenarioCheck> checks;
  std::vector<ProbeReport> probes;
  Overall overall = Overall::reproduced;
};

/// Registered identifiers in run order.
const std::vector<std::string>& scenario_ids();

/// Runs one scenario with its built-in data. Throws UnknownScenario.
ScenarioReport run_scenario(const std::string& id);

std::vector<ScenarioReport> run_all();

/// True if some check fails without being marked as an expected discrepancy.
bool has_unexpected_discrepancy(const ScenarioReport& report);
bool has_unexpected_discrepancy(const std::vector<ScenarioReport>& reports);

}  // namespace banproj
