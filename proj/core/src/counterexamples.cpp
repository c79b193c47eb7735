#include "banproj/counterexamples.hpp"

#include <algorithm>
#include <cmath>

#include "banproj/projections.hpp"

namespace banproj {

namespace {

constexpr double kExact = 1e-12;
constexpr double kRelative = 1e-9;

class ScenarioBuilder {
 public:
  explicit ScenarioBuilder(std::string id) : space_(3, 3.0) { report_.id = std::move(id); }

  const LpSpace& space() const { return space_; }

  template <class T>
  void input(std::string name, T value) {
    report_.inputs.push_back({std::move(name), ScenarioInputValue(std::move(value))});
  }

  void value(std::string label, double computed, double expected, double tol) {
    const bool ok = std::abs(computed - expected) <= tol * std::max(1.0, std::abs(expected));
    report_.checks.push_back({std::move(label), computed, expected, ok, tol, false});
  }

  void vector(std::string label, const std::vector<double>& computed,
              const std::vector<double>& expected, double tol) {
    double err = computed.size() == expected.size() ? 0.0 : INFINITY;
    double scale = 1.0;
    for (std::size_t i = 0; i < std::min(computed.size(), expected.size()); ++i) {
      err = std::max(err, std::abs(computed[i] - expected[i]));
      scale = std::max(scale, std::abs(expected[i]));
    }
    report_.checks.push_back({std::move(label), computed, expected, err <= tol * scale, tol, false});
  }

  void claim(std::string label, CheckValue computed, std::string text, bool holds, double tol,
             bool expected_discrepancy = false) {
    report_.checks.push_back(
        {std::move(label), std::move(computed), ClaimText{std::move(text)}, holds, tol,
         expected_discrepancy});
  }

  void probe(std::string label, const ProbeReport& probe, Verdict expected) {
    const double value =
        probe.witness && !probe.witness->values.empty() ? probe.witness->values.back() : 0.0;
    claim(std::move(label), value, std::string("probe verdict ") + std::string(to_string(expected)),
          probe.verdict == expected, probe.tol);
    report_.probes.push_back(probe);
  }

  ScenarioReport finish() {
    const bool all = std::all_of(report_.checks.begin(), report_.checks.end(),
                                 [](const ScenarioCheck& c) { return c.matches; });
    report_.overall = all ? Overall::reproduced : Overall::discrepancy;
    return std::move(report_);
  }

 private:
  LpSpace space_;
  ScenarioReport report_;
};

std::vector<double> coords(const auto& v) { return v.data(); }

std::vector<double> scaled(double s, std::vector<double> v) {
  for (double& c : v) c *= s;
  return v;
}

const PrimalVector kV{3.0, -2.0, -1.0};
const PrimalVector kW{1.0, -3.0, 2.0};
const PrimalVector kY{25.0, 37.0, 77.0};

PrimalVector g_of(const PrimalVector& v, const PrimalVector& w) {
  return (2.0 / 3.0) * v + (1.0 / 3.0) * w;
}

const double kCbrt4 = std::cbrt(4.0);

ScenarioReport prop2_2() {
  ScenarioBuilder b("prop2.2");
  const auto& X = b.space();
  const PrimalVector g = g_of(kV, kW);
  b.input("v", kV);
  b.input("w", kW);
  b.input("y", kY);
  b.input("g", g);

  b.vector("J v", coords(X.duality_map(kV)), scaled(1.0 / std::cbrt(36.0), {9.0, -4.0, -1.0}),
           kExact);
  b.value("<J v, y>", X.pair(X.duality_map(kV), kY), 0.0, kExact);
  b.value("<J w, y>", X.pair(X.duality_map(kW), kY), 0.0, kExact);
  b.vector("g = 2/3 v + 1/3 w", coords(g), {7.0 / 3.0, -7.0 / 3.0, 0.0}, kExact);
  b.value("|g|_3", X.norm(g), 7.0 / 3.0 * std::cbrt(2.0), kExact);
  b.vector("J g", coords(X.duality_map(g)), scaled(7.0 / (3.0 * std::cbrt(2.0)), {1.0, -1.0, 0.0}),
           kExact);
  b.value("<J g, y>", X.pair(X.duality_map(g), kY), -14.0 * kCbrt4, kRelative);
  b.probe("convexity of {x : <Jx, y> >= 0}",
          halfcone_convexity_refute(X, kY, std::nullopt, kV, kW, {2.0 / 3.0},
                                    HalfconeSense::at_least, kProbeTol),
          Verdict::refuted);
  return b.finish();
}

ScenarioReport prop2_4() {
  ScenarioBuilder b("prop2.4");
  const auto& X = b.space();
  const double beta = 0.1;
  const DualVector psi{-beta, -beta, -beta};
  const PrimalVector g = g_of(kV, kW);
  b.input("v", kV);
  b.input("w", kW);
  b.input("y", kY);
  b.input("beta", beta);
  b.input("psi", psi);

  const double threshold = 14.0 * kCbrt4 / 139.0;
  b.claim("beta threshold 14 cbrt(4) / 139", threshold, "beta < threshold", beta < threshold, 0.0);
  b.value("<-psi, y>", X.pair(-psi, kY), 139.0 * beta, kRelative);
  b.value("<J v - psi, y>", X.pair(X.duality_map(kV) - psi, kY), 139.0 * beta, kRelative);
  b.value("<J w - psi, y>", X.pair(X.duality_map(kW) - psi, kY), 139.0 * beta, kRelative);
  b.value("<J g - psi, y>", X.pair(X.duality_map(g) - psi, kY), -14.0 * kCbrt4 + 139.0 * beta,
          kRelative);
  b.probe("convexity of {x : <Jx - psi, y> >= 0}",
          halfcone_convexity_refute(X, kY, psi, kV, kW, {2.0 / 3.0}, HalfconeSense::at_least,
                                    kProbeTol),
          Verdict::refuted);
  return b.finish();
}

const PrimalVector kU27{0.0, -1.0, 1.0};
const PrimalVector kV27{-1.0, 1.0, 0.0};

double preimage_scale() {
  return std::cbrt(std::pow(3.0, 1.5) + std::pow(2.0, 1.5) + 1.0) / (4.0 * std::cbrt(2.0));
}

std::vector<double> expected_preimage() {
  return scaled(preimage_scale(), {-std::sqrt(3.0), std::sqrt(2.0), 1.0});
}

ScenarioReport prop2_7() {
  ScenarioBuilder b("prop2.7");
  const auto& X = b.space();
  b.input("u", kU27);
  b.input("v", kV27);
  b.input("weight", 0.25);

  const DualVector ju = X.duality_map(kU27);
  const DualVector jv = X.duality_map(kV27);
  const double r = 1.0 / std::cbrt(2.0);
  b.vector("J u", coords(ju), {0.0, -r, r}, kExact);
  b.vector("J v", coords(jv), {-r, r, 0.0}, kExact);
  const DualVector psi = convex_combination(0.25, ju, jv);
  b.vector("psi = 1/4 J u + 3/4 J v", coords(psi), scaled(r / 4.0, {-3.0, 2.0, 1.0}), kExact);
  const PrimalVector pre = X.inverse_duality_map(psi);
  b.vector("J* psi", coords(pre), expected_preimage(), kRelative);
  const double c = preimage_scale();
  b.claim("J* psi on [v, u] would need c sqrt(3) = 1 - c", c * std::sqrt(3.0) - (1.0 - c),
          "nonzero", std::abs(c * std::sqrt(3.0) - (1.0 - c)) > kRelative, kRelative);
  b.probe("J[v, u] is a segment", segment_image_refute(X, kU27, kV27, 0.25, kProbeTol),
          Verdict::refuted);
  return b.finish();
}

ScenarioReport cor2_8() {
  ScenarioBuilder b("cor2.8");
  const auto& X = b.space();
  const DualVector phi{1.0, 1.0, 1.0};
  b.input("phi", phi);
  b.input("u", kU27);
  b.input("v", kV27);
  b.input("weight", 0.25);

  b.value("<phi, u>", X.pair(phi, kU27), 0.0, kExact);
  b.value("<phi, v>", X.pair(phi, kV27), 0.0, kExact);
  const DualVector psi =
      convex_combination(0.25, X.duality_map(kU27), X.duality_map(kV27));
  const PrimalVector pre = X.inverse_duality_map(psi);
  b.vector("J* psi", coords(pre), expected_preimage(), kRelative);
  const double pairing = X.pair(phi, pre);
  b.value("<phi, J* psi>", pairing,
          preimage_scale() * (1.0 + std::sqrt(2.0) - std::sqrt(3.0)), kRelative);
  b.claim("<phi, J* psi> is positive", pairing, "> 0", pairing > 0.0, 0.0);
  b.probe("J K is convex for K = ker(phi)", cone_image_probe(X, kU27, kV27, phi, 0.25, kProbeTol),
          Verdict::refuted);
  return b.finish();
}

ScenarioReport thm3_1() {
  ScenarioBuilder b("thm3.1");
  const auto& X = b.space();
  const ConvexSet C = ConvexSet::segment(PrimalVector::zeros(3), kY);
  const PrimalVector x = kV + kY;
  const PrimalVector z = kW + kY;
  const PrimalVector h = (2.0 / 3.0) * x + (1.0 / 3.0) * z;
  b.input("C", C);
  b.input("y", kY);
  b.input("x", x);
  b.input("z", z);
  b.input("h", h);

  b.vector("x = v + y", coords(x), {28.0, 35.0, 76.0}, kExact);
  b.vector("z = w + y", coords(z), {26.0, 34.0, 79.0}, kExact);
  b.vector("h = g + y", coords(h), coords(g_of(kV, kW) + kY), kExact);
  const auto kind = ProjectionKind::metric;
  const double rx = vi_residual(X, kind, C, x, kY);
  const double rz = vi_residual(X, kind, C, z, kY);
  b.claim("x in P_C^-1(y): VI residual", rx, ">= 0", rx >= -kProbeTol, kProbeTol);
  b.claim("z in P_C^-1(y): VI residual", rz, ">= 0", rz >= -kProbeTol, kProbeTol);
  b.value("h VI residual = <J g, y>", vi_residual(X, kind, C, h, kY), -14.0 * kCbrt4, kRelative);
  const auto px = metric_project(X, C, x);
  b.vector("P_C x", coords(px.point), coords(kY), kRelative);
  const auto ph = metric_project(X, C, h);
  const double off = X.norm(ph.point - kY);
  b.claim("|P_C h - y|", off, "> 0", off > 1e-6 && ph.certified(), 1e-6);
  b.probe("P_C^-1(y) is a cone with vertex y",
          cone_probe(X, kind, C, kY, x, kY, default_t_grid(), kProbeTol), Verdict::consistent);
  b.probe("P_C^-1(y) is convex",
          convexity_refute(X, kind, C, kY, {x, z}, 1, {2.0 / 3.0}, 0, kProbeTol),
          Verdict::refuted);
  return b.finish();
}

const double kInvCbrt3 = 1.0 / std::cbrt(3.0);
const PrimalVector kY35{kInvCbrt3, kInvCbrt3, kInvCbrt3};

ScenarioReport thm3_5_convexity() {
  ScenarioBuilder b("thm3.5-convexity");
  const auto& X = b.space();
  const ConvexSet C = ConvexSet::segment(PrimalVector::zeros(3), kY35);
  const PrimalVector v{1.66, 1.0, -1.0};
  const PrimalVector w{-1.0, 1.0, 1.66};
  const PrimalVector h{0.33, 1.0, 0.33};
  b.input("C", C);
  b.input("y", kY35);
  b.input("v", v);
  b.input("w", w);
  b.input("h", h);

  b.value("|y|_3", X.norm(kY35), 1.0, kExact);
  b.vector("h = (v + w) / 2", coords(0.5 * v + 0.5 * w), coords(h), kExact);
  b.vector("J v", coords(X.duality_map(v)),
           scaled(1.0 / std::cbrt(6.574296), {2.7556, 1.0, -1.0}), kRelative);
  const double jv = X.pair(X.duality_map(v), kY35);
  const double jw = X.pair(X.duality_map(w), kY35);
  b.claim("<J v, y>", jv, "> 1", jv > 1.0, 0.0);
  b.claim("<J w, y>", jw, "> 1", jw > 1.0, 0.0);
  const auto kind = ProjectionKind::generalized_metric;
  const double rv = vi_residual(X, kind, C, v, kY35);
  const double rw = vi_residual(X, kind, C, w, kY35);
  b.claim("v in Pi_C^-1(y): VI residual", rv, ">= 0", rv >= -kProbeTol, kProbeTol);
  b.claim("w in Pi_C^-1(y): VI residual", rw, ">= 0", rw >= -kProbeTol, kProbeTol);
  const double expected_jh = 1.2178 / std::cbrt(3.215622);
  const double jh = X.pair(X.duality_map(h), kY35);
  b.value("<J h, y>", jh, expected_jh, kRelative);
  b.value("<J h - J y, y>", X.pair(X.duality_map(h) - X.duality_map(kY35), kY35),
          expected_jh - 1.0, kRelative);
  const double rh = vi_residual(X, kind, C, h, kY35);
  b.claim("h in Pi_C^-1(y): VI residual", rh, "< 0", rh < -10.0 * kProbeTol, kProbeTol);
  const auto ph = generalized_metric_project(X, C, h);
  const double off = X.norm(ph.point - kY35);
  b.claim("|Pi_C h - y|", off, "> 0", off > 1e-6 && ph.certified(), 1e-6);
  b.probe("Pi_C^-1(y) is convex", convexity_refute(X, kind, C, kY35, {v, w}, 1, {0.5}, 0, kProbeTol),
          Verdict::refuted);
  return b.finish();
}

/// Budget and seed of the search for a replacement cone witness.
constexpr std::size_t kWitnessBudget = 10000;
constexpr std::uint64_t kWitnessSeed = 0;

ScenarioReport thm3_5_cone() {
  ScenarioBuilder b("thm3.5-cone");
  const auto& X = b.space();
  const ConvexSet C = ConvexSet::segment(PrimalVector::zeros(3), kY35);
  const PrimalVector u{2.0 * kInvCbrt3, -kInvCbrt3, kInvCbrt3};
  const PrimalVector g = 0.5 * u + 0.5 * kY35;
  b.input("C", C);
  b.input("y", kY35);
  b.input("u", u);
  b.input("g", g);

  const double ju = X.pair(X.duality_map(u), kY35);
  b.value("<J u, y>", ju, (4.0 / 3.0) / std::cbrt(10.0 / 3.0), kExact);
  b.claim("<J u, y> exceeds 1 (claimed)", ju, "> 1", ju > 1.0, 0.0, true);
  const auto kind = ProjectionKind::generalized_metric;
  const double ru = vi_residual(X, kind, C, u, kY35);
  b.claim("u in Pi_C^-1(y) (claimed): VI residual", ru, ">= 0", ru >= -kProbeTol, kProbeTol, true);
  b.vector("g = (u + y) / 2", coords(g), {1.5 * kInvCbrt3, 0.0, kInvCbrt3}, kExact);
  const double jg = X.pair(X.duality_map(g), kY35);
  b.value("<J g, y>", jg, (13.0 / 6.0) / std::cbrt(35.0 / 3.0), kRelative);
  b.claim("<J g, y> below 1", jg, "< 1", jg < 1.0, 0.0);
  const double rg = vi_residual(X, kind, C, g, kY35);
  b.claim("g in Pi_C^-1(y): VI residual", rg, "< 0", rg < -10.0 * kProbeTol, kProbeTol);

  const ProbeReport search =
      search_non_cone_witness(X, kind, C, kY35, kWitnessBudget, kWitnessSeed, 0.5, kProbeTol);
  if (search.witness) {
    b.input("witness u", std::get<PrimalVector>(search.witness->points.front()));
    b.input("witness midpoint", std::get<PrimalVector>(search.witness->points.back()));
  }
  b.probe("Pi_C^-1(y) is a cone with vertex y (searched witness)", search, Verdict::refuted);
  return b.finish();
}

using Runner = ScenarioReport (*)();

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r{
      {"prop2.2", &prop2_2},
      {"prop2.4", &prop2_4},
      {"prop2.7", &prop2_7},
      {"cor2.8", &cor2_8},
      {"thm3.1", &thm3_1},
      {"thm3.5-convexity", &thm3_5_convexity},
      {"thm3.5-cone", &thm3_5_cone},
  };
  return r;
}

}  // namespace

std::string_view to_string(Overall overall) {
  return overall == Overall::reproduced ? "reproduced" : "discrepancy";
}

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, run] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

ScenarioReport run_scenario(const std::string& id) {
  for (const auto& [name, run] : registry()) {
    if (name == id) return run();
  }
  throw UnknownScenario("unknown scenario '" + id + "'");
}

std::vector<ScenarioReport> run_all() {
  std::vector<ScenarioReport> out;
  for (const auto& [name, run] : registry()) out.push_back(run());
  return out;
}

bool has_unexpected_discrepancy(const ScenarioReport& report) {
  return std::any_of(report.checks.begin(), report.checks.end(), [](const ScenarioCheck& c) {
    return !c.matches && !c.expected_discrepancy;
  });
}

bool has_unexpected_discrepancy(const std::vector<ScenarioReport>& reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const ScenarioReport& r) { return has_unexpected_discrepancy(r); });
}

}  // namespace banproj
