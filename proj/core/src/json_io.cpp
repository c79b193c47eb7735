#include "banproj/json_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace banproj::json {

namespace {

[[noreturn]] void fail(std::string_view what, std::string_view problem) {
  throw InvalidArgument(std::string(what) + ": " + std::string(problem));
}

void require_keys(const Json& j, std::string_view what, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) fail(what, "unexpected key '" + key + "'");
  }
  for (const auto& key : allowed) {
    if (!j.contains(key)) fail(what, "missing key '" + key + "'");
  }
}

Json check_value_json(const CheckValue& v) {
  return std::visit([](const auto& x) -> Json {
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, double>) {
      return number(x);
    } else {
      return to_json(x);
    }
  }, v);
}

}  // namespace

Json number(double value) {
  if (!std::isfinite(value)) return Json(nullptr);
  return Json(value);
}

Json to_json(const std::vector<double>& coords) {
  Json out = Json::array();
  for (double c : coords) out.push_back(number(c));
  return out;
}

Json to_json(const PrimalVector& x) { return to_json(x.data()); }
Json to_json(const DualVector& psi) { return to_json(psi.data()); }

Json to_json(const Query& q) {
  Json out;
  out["space"] = std::holds_alternative<PrimalVector>(q) ? "primal" : "dual";
  out["coords"] = std::visit([](const auto& v) { return to_json(v.data()); }, q);
  return out;
}

Json to_json(const ConvexSet& set) {
  Json out;
  out["type"] = set.type_name();
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Segment>) {
          out["a"] = to_json(s.a);
          out["b"] = to_json(s.b);
        } else if constexpr (std::is_same_v<S, Ray>) {
          out["vertex"] = to_json(s.vertex);
          out["direction"] = to_json(s.direction);
        } else if constexpr (std::is_same_v<S, Line>) {
          out["point"] = to_json(s.point);
          out["direction"] = to_json(s.direction);
        } else {
          Json vs = Json::array();
          for (const auto& v : s.vertices) vs.push_back(to_json(v));
          out["vertices"] = std::move(vs);
        }
      },
      set.shape());
  return out;
}

Json to_json(const ProjectionResult& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  out["point"] = to_json(r.point);
  out["optimal_value"] = number(r.optimal_value);
  out["vi_residual"] = number(r.vi_residual);
  out["iterations"] = r.iterations;
  out["tol"] = number(r.tol);
  out["converged"] = r.converged;
  out["certified"] = r.certified();
  return out;
}

Json to_json(const Witness& w) {
  Json out;
  Json points = Json::array();
  for (const auto& p : w.points) points.push_back(to_json(p));
  out["points"] = std::move(points);
  out["values"] = to_json(w.values);
  out["parameter"] = number(w.parameter);
  out["note"] = w.note;
  return out;
}

Json to_json(const ProbeReport& r) {
  Json out;
  out["kind"] = r.kind ? Json(to_string(*r.kind)) : Json(nullptr);
  out["claim"] = to_string(r.claim);
  out["verdict"] = to_string(r.verdict);
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  out["samples"] = r.samples;
  out["tol"] = number(r.tol);
  return out;
}

Json to_json(const ConjugacyReport& r) {
  Json out;
  out["checked"] = r.checked;
  out["failures"] = r.failures;
  out["passed"] = r.passed();
  return out;
}

Json to_json(const ModulusEstimate& e) {
  Json out;
  out["argument"] = number(e.argument);
  out["value"] = number(e.value);
  out["bound_kind"] = to_string(e.bound_kind);
  out["samples_used"] = e.samples_used;
  out["refinement_iterations"] = e.refinement_iterations;
  return out;
}

Json to_json(const KrEstimate& e) {
  Json out;
  out["value"] = number(e.value);
  out["raw_ratio"] = number(e.raw_ratio);
  out["clamped"] = e.clamped;
  out["radius"] = number(e.radius);
  out["distance"] = number(e.distance);
  out["gamma"] = number(e.gamma);
  out["delta"] = to_json(e.delta);
  out["rho"] = to_json(e.rho);
  return out;
}

Json to_json(const FigielDiagnostic& d) {
  Json out;
  out["x"] = to_json(d.x);
  out["y"] = to_json(d.y);
  out["gamma"] = number(d.gamma);
  out["radius"] = number(d.radius);
  out["lhs_monotone"] = number(d.lhs_monotone);
  out["rhs_monotone"] = number(d.rhs_monotone);
  out["monotone_holds"] = d.monotone_holds;
  out["lhs_lipschitz"] = number(d.lhs_lipschitz);
  out["rhs_lipschitz"] = number(d.rhs_lipschitz);
  out["lipschitz_holds"] = d.lipschitz_holds;
  out["smoothness_modulus"] = d.smoothness_modulus;
  out["delta"] = to_json(d.delta);
  out["rho"] = to_json(d.rho);
  return out;
}

Json to_json(const SequenceTrial& t) {
  Json out;
  out["theorem"] = t.theorem;
  out["kind"] = t.kind ? Json(to_string(*t.kind)) : Json(nullptr);
  out["set"] = to_json(t.set);
  out["limit"] = to_json(t.limit);
  Json terms = Json::array();
  for (const auto& q : t.terms) terms.push_back(to_json(q));
  out["terms"] = std::move(terms);
  out["per_term"] = to_json(t.per_term);
  out["liminf_proxy"] = number(t.liminf_proxy);
  out["target"] = number(t.target);
  out["slack"] = number(t.slack);
  out["passed"] = t.passed;
  if (t.y) out["y"] = to_json(*t.y);
  if (t.kr) out["kr"] = to_json(*t.kr);
  return out;
}

Json to_json(const ScenarioCheck& c) {
  Json out;
  out["label"] = c.label;
  out["computed"] = check_value_json(c.computed);
  if (const auto* claim = std::get_if<ClaimText>(&c.expected)) {
    out["expected"] = "claim";
    out["claim"] = claim->text;
  } else if (const auto* d = std::get_if<double>(&c.expected)) {
    out["expected"] = number(*d);
  } else {
    out["expected"] = to_json(std::get<std::vector<double>>(c.expected));
  }
  out["matches"] = c.matches;
  out["tolerance"] = number(c.tolerance);
  out["expected_discrepancy"] = c.expected_discrepancy;
  return out;
}

Json to_json(const ScenarioReport& r) {
  Json out;
  out["id"] = r.id;
  out["p"] = number(r.p);
  Json inputs;
  for (const auto& in : r.inputs) {
    inputs[in.name] = std::visit(
        [](const auto& v) -> Json {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>) {
            return number(v);
          } else {
            return to_json(v);
          }
        },
        in.value);
  }
  out["inputs"] = std::move(inputs);
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  Json probes = Json::array();
  for (const auto& p : r.probes) probes.push_back(to_json(p));
  out["probes"] = std::move(probes);
  out["overall"] = to_string(r.overall);
  return out;
}

Json to_json(const std::vector<ScenarioReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

Json parse(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    fail(what, std::string("invalid JSON (") + e.what() + ")");
  }
}

Json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

std::vector<double> parse_coords(const Json& j, std::string_view what) {
  if (!j.is_array()) fail(what, "expected an array of numbers");
  if (j.empty()) fail(what, "vector must not be empty");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_number()) fail(what, "vector entries must be numbers");
    const double v = c.get<double>();
    if (!std::isfinite(v)) fail(what, "vector entries must be finite");
    out.push_back(v);
  }
  return out;
}

ConvexSet parse_set(const Json& j) {
  constexpr std::string_view what = "set";
  if (!j.is_object()) fail(what, "expected an object");
  if (!j.contains("type") || !j["type"].is_string()) fail(what, "missing string key 'type'");
  const std::string type = j["type"].get<std::string>();
  auto vec = [&](const char* key) {
    return PrimalVector(parse_coords(j[key], std::string(what) + "." + key));
  };
  try {
    if (type == "segment") {
      require_keys(j, what, {"type", "a", "b"});
      return ConvexSet::segment(vec("a"), vec("b"));
    }
    if (type == "ray") {
      require_keys(j, what, {"type", "vertex", "direction"});
      return ConvexSet::ray(vec("vertex"), vec("direction"));
    }
    if (type == "line") {
      require_keys(j, what, {"type", "point", "direction"});
      return ConvexSet::line(vec("point"), vec("direction"));
    }
    if (type == "polytope") {
      require_keys(j, what, {"type", "vertices"});
      const Json& vs = j["vertices"];
      if (!vs.is_array() || vs.empty()) fail(what, "'vertices' must be a nonempty array");
      std::vector<PrimalVector> vertices;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        vertices.emplace_back(parse_coords(vs[i], "set.vertices[" + std::to_string(i) + "]"));
      }
      return ConvexSet::polytope(std::move(vertices));
    }
  } catch (const DimensionMismatch& e) {
    fail(what, e.what());
  }
  fail(what, "unknown type '" + type + "'");
}

std::vector<std::vector<double>> parse_candidates(const Json& j) {
  constexpr std::string_view what = "candidates";
  const Json* list = &j;
  if (j.is_object()) {
    require_keys(j, what, {"candidates"});
    list = &j["candidates"];
  }
  if (!list->is_array() || list->empty()) fail(what, "expected a nonempty array of vectors");
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < list->size(); ++i) {
    out.push_back(parse_coords((*list)[i], "candidates[" + std::to_string(i) + "]"));
    if (out.back().size() != out.front().size()) fail(what, "candidates differ in length");
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace banproj::json
