#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "banproj/counterexamples.hpp"
#include "banproj/inverse_probe.hpp"
#include "banproj/moduli.hpp"
#include "banproj/projections.hpp"
#include "banproj/sequences.hpp"

/// JSON encoding of inputs and results. Keys keep insertion order so that
/// equal results serialize to identical bytes; non-finite numbers become null.
namespace banproj::json {

using Json = nlohmann::ordered_json;

Json number(double value);
Json to_json(const std::vector<double>& coords);
Json to_json(const PrimalVector& x);
Json to_json(const DualVector& psi);
/// {"space": "primal"|"dual", "coords": [...]}
Json to_json(const Query& q);
Json to_json(const ConvexSet& set);
Json to_json(const ProjectionResult& result);
Json to_json(const Witness& witness);
Json to_json(const ProbeReport& report);
Json to_json(const ConjugacyReport& report);
Json to_json(const ModulusEstimate& estimate);
Json to_json(const KrEstimate& estimate);
Json to_json(const FigielDiagnostic& diagnostic);
Json to_json(const SequenceTrial& trial);
Json to_json(const ScenarioCheck& check);
Json to_json(const ScenarioReport& report);
Json to_json(const std::vector<ScenarioReport>& reports);

/// Parses JSON text; InvalidArgument (naming `what`) on syntax errors.
Json parse(std::string_view text, std::string_view what);
/// Reads and parses a file; InvalidArgument if it cannot be read.
Json read_file(const std::filesystem::path& path);

/// Schema checks. Each throws InvalidArgument with a message naming `what`.
///
/// vector:     nonempty array of finite numbers
/// set:        {"type": "segment", "a": v, "b": v} | {"type": "ray", "vertex": v,
///             "direction": v} | {"type": "line", "point": v, "direction": v} |
///             {"type": "polytope", "vertices": [v, ...]}, no other keys,
///             all vectors of one length
/// candidates: [v, ...] or {"candidates": [v, ...]}, all of one length
std::vector<double> parse_coords(const Json& j, std::string_view what);
ConvexSet parse_set(const Json& j);
std::vector<std::vector<double>> parse_candidates(const Json& j);

/// Two-space indentation, trailing newline.
std::string dump(const Json& j);

}  // namespace banproj::json
