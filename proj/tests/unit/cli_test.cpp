#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "banproj/cli.hpp"
#include "banproj/json_io.hpp"

namespace banproj {
namespace {

using json::Json;
namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;

  Json doc() const { return json::parse(out, "stdout"); }
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "banproj");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("banproj_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST(Cli, DualityOfWorkedVector) {
  const auto r = run({"duality", "--p", "3", "--x", "[3,-2,-1]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = r.doc();
  const double s = 1.0 / std::cbrt(36.0);
  EXPECT_NEAR(j["J_x"][0].get<double>(), 9.0 * s, 1e-14);
  EXPECT_NEAR(j["J_x"][1].get<double>(), -4.0 * s, 1e-14);
  EXPECT_NEAR(j["J_x"][2].get<double>(), -1.0 * s, 1e-14);
}

TEST(Cli, DualityWithFunctionalAndLyapunov) {
  const auto r = run({"duality", "--p", "2", "--x", "[1,2]", "--psi", "[1,2]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(r.doc()["lyapunov"].get<double>(), 0.0, 1e-12);
  EXPECT_EQ(r.doc()["Jstar_psi"], Json::parse("[1.0,2.0]"));
}

TEST_F(CliFiles, ProjectWorkedSegment) {
  const auto set = write("seg.json", R"({"type":"segment","a":[0,0,0],"b":[25,37,77]})");
  const auto query = write("q.json", "[28,35,76]");
  const auto r = run({"project", "--kind", "metric", "--set", set, "--query", query});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json res = r.doc()["result"];
  EXPECT_EQ(res["point"], Json::parse("[25.0,37.0,77.0]"));
  EXPECT_GE(res["vi_residual"].get<double>(), -1e-8);
  EXPECT_TRUE(res["certified"].get<bool>());
}

TEST_F(CliFiles, InlineValueWinsOverFile) {
  const auto query = write("q.json", "[100,0,0]");
  const auto r = run({"project", "--set", R"({"type":"segment","a":[0,0,0],"b":[25,37,77]})",
                      "--query", "[28,35,76]", "--query-file", query});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_EQ(r.doc()["query"]["coords"], Json::parse("[28.0,35.0,76.0]"));
}

TEST_F(CliFiles, BadInputsExitOne) {
  const auto bad_set = write("bad.json", R"({"type":"segment","a":[0,0]})");
  EXPECT_EQ(run({"project", "--set", bad_set, "--query", "[1,2]"}).code, cli::kBadInput);
  EXPECT_EQ(run({"project", "--set", "/nonexistent.json", "--query", "[1,2]"}).code,
            cli::kBadInput);
  EXPECT_EQ(run({"duality", "--p", "1", "--x", "[1]"}).code, cli::kBadInput);
  EXPECT_EQ(run({"duality", "--x", "[1, oops]"}).code, cli::kBadInput);
  EXPECT_EQ(run({"nonsense"}).code, cli::kBadInput);
  EXPECT_EQ(run({}).code, cli::kBadInput);
  EXPECT_EQ(run({"project", "--kind", "nearest", "--set", R"({"type":"segment","a":[0],"b":[1]})",
                 "--query", "[2]"})
                .code,
            cli::kBadInput);
  EXPECT_EQ(run({"project", "--tol", "-1", "--set", R"({"type":"segment","a":[0],"b":[1]})",
                 "--query", "[2]"})
                .code,
            cli::kBadInput);
}

TEST(Cli, UncertifiedSolveExitsThree) {
  const auto r = run({"project", "--p", "3", "--tol", "1e-300", "--set",
                      R"({"type":"polytope","vertices":[[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})",
                      "--query", "[1,1,1]"});
  EXPECT_EQ(r.code, cli::kSolverFailure);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, ReproduceAllScenarios) {
  const auto a = run({"reproduce"});
  ASSERT_EQ(a.code, 0) << a.err;
  const Json j = a.doc();
  EXPECT_EQ(j["reports"].size(), 7u);
  EXPECT_FALSE(j["summary"]["unexpected_discrepancy"].get<bool>());
  EXPECT_EQ(run({"reproduce"}).out, a.out);
  const auto one = run({"reproduce", "--id", "thm3.1"});
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(one.doc()["reports"][0]["overall"], "reproduced");
  EXPECT_EQ(run({"reproduce", "--id", "nope"}).code, cli::kBadInput);
}

TEST_F(CliFiles, ReproduceWritesFile) {
  const fs::path out = dir_ / "report.json";
  const auto r = run({"reproduce", "--id", "prop2.2", "--json", out.string()});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), r.out);
}

TEST(Cli, ProbeConvexityRefuted) {
  const auto r = run({"probe", "--kind", "metric", "--claim", "convex", "--set",
                      R"({"type":"segment","a":[0,0,0],"b":[25,37,77]})", "--y", "[25,37,77]",
                      "--candidates", "[[28,35,76],[26,34,79]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["report"]["verdict"], "refuted");
}

TEST(Cli, ProbeConeConsistent) {
  const auto r = run({"probe", "--kind", "metric", "--claim", "cone", "--set",
                      R"({"type":"segment","a":[0,0,0],"b":[25,37,77]})", "--y", "[25,37,77]",
                      "--candidates", "[[28,35,76],[26,34,79]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.doc()["report"]["verdict"], "consistent");
}

TEST(Cli, ProbeRejectsNonMember) {
  const auto r = run({"probe", "--kind", "metric", "--claim", "cone", "--set",
                      R"({"type":"segment","a":[0,0,0],"b":[25,37,77]})", "--y", "[25,37,77]",
                      "--candidates", "[[0,0,100]]"});
  EXPECT_EQ(r.code, cli::kBadInput);
}

TEST(Cli, ModuliAndSeedFromEnvironment) {
  const std::vector<std::string> args{"moduli", "--p", "2", "--n", "2", "--eps", "0.5",
                                      "--t", "0.5", "--budget", "500", "--refine", "20"};
  ::setenv("BANPROJ_SEED", "77", 1);
  const auto a = run(args);
  ::unsetenv("BANPROJ_SEED");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.doc()["seed"], 77);
  EXPECT_NEAR(a.doc()["delta"][0]["value"].get<double>(), 1.0 - std::sqrt(1.0 - 0.0625), 5e-3);
  EXPECT_EQ(a.doc()["rho"][0]["bound_kind"], "lower_bound_of_sup");
  auto with_seed = args;
  with_seed.insert(with_seed.end(), {"--seed", "77"});
  EXPECT_EQ(run(with_seed).out, a.out);
  ::setenv("BANPROJ_SEED", "seventy", 1);
  EXPECT_EQ(run(args).code, cli::kBadInput);
  ::unsetenv("BANPROJ_SEED");
}

TEST(Cli, SequenceTrials) {
  const std::string set = R"({"type":"segment","a":[0,0,0],"b":[25,37,77]})";
  for (const char* th : {"3.2", "3.6", "3.8"}) {
    const auto r = run({"sequence-trial", "--theorem", th, "--set", set, "--x", "[28,35,76]",
                        "--seed", "3", "--n", "12"});
    ASSERT_EQ(r.code, 0) << th << r.err;
    EXPECT_TRUE(r.doc()["trial"]["passed"].get<bool>()) << th;
  }
  const auto g = run({"sequence-trial", "--theorem", "3.4", "--set", set, "--x", "[1,2,3]"});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(g.doc()["trial"]["kind"], "generalized");
  const auto k = run({"sequence-trial", "--theorem", "3.8", "--set", set, "--x", "[28,35,76]"});
  EXPECT_EQ(k.doc()["trial"]["kr"]["delta"]["bound_kind"], "upper_bound_of_inf");
  EXPECT_EQ(run({"sequence-trial", "--theorem", "4.1", "--set", set, "--x", "[1,2,3]"}).code,
            cli::kBadInput);
}

}  // namespace
}  // namespace banproj
