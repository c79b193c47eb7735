#include "banproj/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "banproj/counterexamples.hpp"
#include "banproj/inverse_probe.hpp"
#include "banproj/json_io.hpp"
#include "banproj/moduli.hpp"
#include "banproj/projections.hpp"
#include "banproj/sequences.hpp"

namespace banproj::cli {

namespace {

using json::Json;

/// Raised when a solver stops without a certificate.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

/// An input given either inline (JSON text) or as a file path, with an
/// optional --<name>-file alternative.
struct JsonArg {
  explicit JsonArg(std::string n) : name(std::move(n)) {}

  std::string name;
  std::string value;
  std::string file;

  bool given() const { return !value.empty() || !file.empty(); }
};

void add_json_arg(CLI::App& app, JsonArg& arg, const std::string& help) {
  app.add_option("--" + arg.name, arg.value, help + " (inline JSON or file path)");
  app.add_option("--" + arg.name + "-file", arg.file, help + " (file path)");
}

bool looks_inline(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '[' || text[pos] == '{');
}

Json load(const JsonArg& arg, std::ostream& err) {
  if (!arg.given()) throw InvalidArgument("missing required input --" + arg.name);
  if (!arg.value.empty()) {
    if (!arg.file.empty()) {
      err << "warning: both --" << arg.name << " and --" << arg.name << "-file given; using --"
          << arg.name << "\n";
    }
    return looks_inline(arg.value) ? json::parse(arg.value, "--" + arg.name)
                                   : json::read_file(arg.value);
  }
  return json::read_file(arg.file);
}

std::vector<double> load_coords(const JsonArg& arg, std::ostream& err) {
  return json::parse_coords(load(arg, err), arg.name);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("BANPROJ_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long long v = std::stoull(text, &used, 10);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("BANPROJ_SEED must be a nonnegative 64-bit integer");
  }
}

Json space_json(const LpSpace& space) {
  Json out;
  out["n"] = space.n();
  out["p"] = json::number(space.p());
  out["q"] = json::number(space.q());
  return out;
}

void check_tol(const std::optional<double>& tol) {
  if (tol && !(*tol > 0.0 && std::isfinite(*tol))) throw InvalidArgument("--tol must be > 0");
}

Query make_query(ProjectionKind kind, std::vector<double> coords) {
  if (kind == ProjectionKind::generalized) return DualVector(std::move(coords));
  return PrimalVector(std::move(coords));
}

struct Options {
  double p = 3.0;
  std::optional<double> tol;
  std::uint64_t seed = 0;
};

// duality ------------------------------------------------------------------

struct DualityCmd {
  JsonArg x{"x"};
  JsonArg psi{"psi"};

  void setup(CLI::App& app) {
    add_json_arg(app, x, "point of X");
    add_json_arg(app, psi, "functional in X*");
  }

  Json run(const Options& opt, std::ostream& err) const {
    if (!x.given() && !psi.given()) throw InvalidArgument("duality needs --x and/or --psi");
    std::optional<PrimalVector> xv;
    std::optional<DualVector> pv;
    if (x.given()) xv = PrimalVector(load_coords(x, err));
    if (psi.given()) pv = DualVector(load_coords(psi, err));
    const LpSpace space(xv ? xv->size() : pv->size(), opt.p);
    Json out;
    out["space"] = space_json(space);
    if (xv) {
      const DualVector jx = space.duality_map(*xv);
      out["x"] = json::to_json(*xv);
      out["norm_x"] = json::number(space.norm(*xv));
      out["J_x"] = json::to_json(jx);
      out["dual_norm_J_x"] = json::number(space.dual_norm(jx));
      out["pair_J_x_x"] = json::number(space.pair(jx, *xv));
    }
    if (pv) {
      const PrimalVector jp = space.inverse_duality_map(*pv);
      out["psi"] = json::to_json(*pv);
      out["dual_norm_psi"] = json::number(space.dual_norm(*pv));
      out["Jstar_psi"] = json::to_json(jp);
      out["norm_Jstar_psi"] = json::number(space.norm(jp));
    }
    if (xv && pv) out["lyapunov"] = json::number(space.lyapunov(*pv, *xv));
    return out;
  }
};

// project ------------------------------------------------------------------

struct ProjectCmd {
  std::string kind = "metric";
  JsonArg set{"set"};
  JsonArg query{"query"};

  void setup(CLI::App& app) {
    app.add_option("--kind", kind, "metric | generalized | gmp")->capture_default_str();
    add_json_arg(app, set, "convex set descriptor");
    add_json_arg(app, query, "query vector (a functional for --kind generalized)");
  }

  Json run(const Options& opt, std::ostream& err) const {
    const ProjectionKind k = parse_projection_kind(kind);
    const ConvexSet c = json::parse_set(load(set, err));
    const Query q = make_query(k, load_coords(query, err));
    const LpSpace space(c.dimension(), opt.p);
    const ProjectionResult r = project(space, k, c, q, opt.tol);
    if (!r.certified()) {
      throw SolverFailure("projection stopped after " + std::to_string(r.iterations) +
                          " iterations without a certificate (vi_residual " +
                          std::to_string(r.vi_residual) + ")");
    }
    Json out;
    out["space"] = space_json(space);
    out["set"] = json::to_json(c);
    out["query"] = json::to_json(q);
    out["result"] = json::to_json(r);
    return out;
  }
};

// probe --------------------------------------------------------------------

struct ProbeCmd {
  std::string kind = "metric";
  std::string claim = "convex";
  JsonArg set{"set"};
  JsonArg y{"y"};
  JsonArg candidates{"candidates"};
  std::size_t pairs = 10000;

  void setup(CLI::App& app) {
    app.add_option("--kind", kind, "metric | generalized | gmp")->capture_default_str();
    app.add_option("--claim", claim, "cone | convex")->capture_default_str();
    add_json_arg(app, set, "convex set descriptor");
    add_json_arg(app, y, "point y of the set");
    add_json_arg(app, candidates, "members of the inverse image");
    app.add_option("--pairs", pairs, "pair budget for convexity probes")->capture_default_str();
  }

  Json run(const Options& opt, std::ostream& err) const {
    const ProjectionKind k = parse_projection_kind(kind);
    const Claim cl = parse_claim(claim);
    const ConvexSet c = json::parse_set(load(set, err));
    const PrimalVector yv(load_coords(y, err));
    const LpSpace space(c.dimension(), opt.p);
    std::vector<Query> members;
    for (auto& coords : json::parse_candidates(load(candidates, err))) {
      members.push_back(make_query(k, std::move(coords)));
    }
    const double tol = opt.tol.value_or(kProbeTol);

    ProbeReport report;
    if (cl == Claim::is_cone) {
      const Query vertex =
          k == ProjectionKind::generalized ? Query(space.duality_map(yv)) : Query(yv);
      report.kind = k;
      report.claim = cl;
      report.tol = tol;
      for (const auto& m : members) {
        ProbeReport one = cone_probe(space, k, c, yv, m, vertex, default_t_grid(), tol);
        report.samples += one.samples;
        if (one.verdict == Verdict::refuted) {
          report.verdict = one.verdict;
          report.witness = std::move(one.witness);
          break;
        }
      }
    } else if (cl == Claim::is_convex) {
      report = convexity_refute(space, k, c, yv, members, pairs, default_pair_weights(), opt.seed,
                                tol);
    } else {
      throw InvalidArgument("probe --claim must be cone or convex");
    }
    Json out;
    out["space"] = space_json(space);
    out["set"] = json::to_json(c);
    out["y"] = json::to_json(yv);
    out["candidates"] = members.size();
    out["seed"] = opt.seed;
    out["report"] = json::to_json(report);
    return out;
  }
};

// moduli -------------------------------------------------------------------

struct ModuliCmd {
  std::size_t n = 3;
  std::vector<double> eps;
  std::vector<double> t;
  std::size_t samples = SamplingBudget{}.samples;
  std::size_t refine = SamplingBudget{}.refinement_steps;
  unsigned workers = 1;

  void setup(CLI::App& app) {
    app.add_option("--n", n, "dimension")->capture_default_str();
    app.add_option("--eps", eps, "arguments of the modulus of convexity");
    app.add_option("--t", t, "arguments of the modulus of smoothness");
    app.add_option("--budget", samples, "random samples per estimate")->capture_default_str();
    app.add_option("--refine", refine, "Nelder-Mead steps per estimate")->capture_default_str();
    app.add_option("--workers", workers, "worker threads")->capture_default_str();
  }

  Json run(const Options& opt, std::ostream&) const {
    if (eps.empty() && t.empty()) throw InvalidArgument("moduli needs --eps and/or --t");
    if (workers == 0) throw InvalidArgument("--workers must be at least 1");
    const LpSpace space(n, opt.p);
    const SamplingBudget budget{samples, refine, opt.seed, workers};
    Json out;
    out["space"] = space_json(space);
    out["seed"] = opt.seed;
    Json deltas = Json::array();
    for (double e : eps) deltas.push_back(json::to_json(modulus_convexity(space, e, budget)));
    Json rhos = Json::array();
    for (double s : t) rhos.push_back(json::to_json(modulus_smoothness(space, s, budget)));
    out["delta"] = std::move(deltas);
    out["rho"] = std::move(rhos);
    return out;
  }
};

// sequence-trial -----------------------------------------------------------

struct SequenceCmd {
  std::string theorem;
  JsonArg set{"set"};
  JsonArg x{"x"};
  JsonArg y{"y"};
  std::size_t terms = 16;
  double gamma = kDefaultFigielGamma;

  void setup(CLI::App& app) {
    app.add_option("--theorem", theorem, "3.2 | 3.4 | 3.6 | 3.8")->required();
    add_json_arg(app, set, "convex set descriptor");
    add_json_arg(app, x, "limit point (a functional for 3.4)");
    add_json_arg(app, y, "expected projection for 3.4 / 3.6");
    app.add_option("--n", terms, "number of terms")->capture_default_str();
    app.add_option("--gamma", gamma, "Figiel constant for 3.8")->capture_default_str();
  }

  Json run(const Options& opt, std::ostream& err) const {
    const ConvexSet c = json::parse_set(load(set, err));
    const LpSpace space(c.dimension(), opt.p);
    std::vector<double> limit = load_coords(x, err);
    std::optional<PrimalVector> yv;
    if (y.given()) yv = PrimalVector(load_coords(y, err));
    const SequenceTrial trial = [&] {
      if (theorem == "3.2") {
        return lsc_distance_trial(space, c, PrimalVector(std::move(limit)), opt.seed, terms);
      }
      if (theorem == "3.4") {
        return graph_closedness_trial(space, ProjectionKind::generalized, c,
                                      DualVector(std::move(limit)), yv, terms, opt.seed);
      }
      if (theorem == "3.6") {
        return graph_closedness_trial(space, ProjectionKind::generalized_metric, c,
                                      PrimalVector(std::move(limit)), yv, terms, opt.seed);
      }
      if (theorem == "3.8") {
        SamplingBudget budget = kTrialBudget;
        budget.seed = opt.seed;
        return kr_liminf_trial(space, c, PrimalVector(std::move(limit)), gamma, terms, opt.seed,
                               budget);
      }
      throw InvalidArgument("--theorem must be one of 3.2, 3.4, 3.6, 3.8");
    }();
    Json out;
    out["space"] = space_json(space);
    out["seed"] = opt.seed;
    out["trial"] = json::to_json(trial);
    return out;
  }
};

// reproduce ----------------------------------------------------------------

struct ReproduceCmd {
  std::string id;
  std::string json_out;

  void setup(CLI::App& app) {
    app.add_option("--id", id, "run a single scenario");
    app.add_option("--json", json_out, "also write the report to this file");
  }

  Json run(bool& unexpected) const {
    const std::vector<ScenarioReport> reports =
        id.empty() ? run_all() : std::vector<ScenarioReport>{run_scenario(id)};
    unexpected = has_unexpected_discrepancy(reports);
    std::size_t reproduced = 0;
    for (const auto& r : reports) reproduced += r.overall == Overall::reproduced ? 1 : 0;
    Json out;
    out["reports"] = json::to_json(reports);
    Json summary;
    summary["total"] = reports.size();
    summary["reproduced"] = reproduced;
    summary["discrepancy"] = reports.size() - reproduced;
    summary["unexpected_discrepancy"] = unexpected;
    out["summary"] = std::move(summary);
    if (!json_out.empty()) {
      std::ofstream file(json_out);
      if (!file) throw InvalidArgument("cannot write '" + json_out + "'");
      file << json::dump(out);
    }
    return out;
  }
};

void add_common(CLI::App& app, Options& opt, bool with_seed) {
  app.add_option("--p", opt.p, "exponent of l_p, > 1")->capture_default_str();
  app.add_option("--tol", opt.tol, "solver / probe tolerance, > 0");
  if (with_seed) app.add_option("--seed", opt.seed, "seed (default $BANPROJ_SEED or 0)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Duality maps and projections in l_p^n, with certified answers"};
  app.name(args.empty() ? "banproj" : args.front());
  app.require_subcommand(1);

  Options opt;
  DualityCmd duality;
  ProjectCmd project_cmd;
  ProbeCmd probe;
  ModuliCmd moduli;
  SequenceCmd sequence;
  ReproduceCmd reproduce;

  auto* s_duality = app.add_subcommand("duality", "evaluate J x, J* psi and V(psi, x)");
  auto* s_project = app.add_subcommand("project", "project a query onto a convex set");
  auto* s_probe = app.add_subcommand("probe", "probe cone / convexity of an inverse image");
  auto* s_moduli = app.add_subcommand("moduli", "estimate moduli of convexity and smoothness");
  auto* s_sequence = app.add_subcommand("sequence-trial", "run a sequence trial");
  auto* s_reproduce = app.add_subcommand("reproduce", "run the registered scenarios");

  duality.setup(*s_duality);
  add_common(*s_duality, opt, false);
  project_cmd.setup(*s_project);
  add_common(*s_project, opt, false);
  probe.setup(*s_probe);
  add_common(*s_probe, opt, true);
  moduli.setup(*s_moduli);
  add_common(*s_moduli, opt, true);
  sequence.setup(*s_sequence);
  add_common(*s_sequence, opt, true);
  reproduce.setup(*s_reproduce);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("banproj");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    opt.seed = default_seed();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }

  try {
    if (!(opt.p > 1.0) || !std::isfinite(opt.p)) throw InvalidArgument("--p must be > 1");
    check_tol(opt.tol);
    Json result;
    int code = kOk;
    if (s_duality->parsed()) {
      result = duality.run(opt, err);
    } else if (s_project->parsed()) {
      result = project_cmd.run(opt, err);
    } else if (s_probe->parsed()) {
      result = probe.run(opt, err);
    } else if (s_moduli->parsed()) {
      result = moduli.run(opt, err);
    } else if (s_sequence->parsed()) {
      result = sequence.run(opt, err);
    } else {
      bool unexpected = false;
      result = reproduce.run(unexpected);
      if (unexpected) {
        err << "error: unexpected discrepancy in reproduced scenarios\n";
        code = kUnexpectedDiscrepancy;
      }
    }
    out << json::dump(result);
    return code;
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const Unbounded& e) {
    err << "error: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kSolverFailure;
  }
}

}  // namespace banproj::cli
