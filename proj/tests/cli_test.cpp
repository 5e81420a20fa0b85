#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "mim_cli.hpp"

namespace mim::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "mim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

TEST(CliEval, Examples) {
  auto r = run_args({"eval", "--dist", "0.5,0.5", "--omega", "10"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json_of(r)["mim"].get<double>(), 5.0);
  r = run_args({"eval", "--dist", "0.1,0.9", "--omega", "0"});
  EXPECT_EQ(json_of(r)["mim"].get<double>(), 0.0);
  r = run_args({"eval", "--dist", "0.1,0.9", "--omega", "10", "--alpha", "0.5"});
  const auto j = json_of(r);
  EXPECT_NEAR(j["mim"].get<double>(), 6.7005, 1e-3);
  EXPECT_NEAR(j["renyi"].get<double>(), 0.4700, 1e-4);
  EXPECT_NEAR(j["lower_bound"].get<double>(), 1.8, 1e-12);
}

TEST(CliEval, ValidationFailuresExitTwoWithOneLine) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "--dist", "0.3,-0.1,0.8", "--omega", "1"},
           {"eval", "--dist", "0.5,0.4", "--omega", "1"},
           {"eval", "--dist", "0.5,abc", "--omega", "1"},
           {"eval", "--dist", "0.5,0.5", "--omega", "-1"},
           {"eval", "--dist", "0.5,0.5"},
           {"bogus"}}) {
    const auto r = run_args(args);
    EXPECT_EQ(r.code, kExitInvalid) << args[0];
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(r.err.find('\n'), r.err.size() - 1);
  }
}

TEST(CliSelectOmega, Examples) {
  auto r = run_args({"select-omega", "--dist", "0.0925,0.3156,0.3887,0.1484,0.0549", "--normalize"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(json_of(r)["threshold"].get<double>(), 20.0011, 1e-3);
  EXPECT_EQ(json_of(r)["rule"], "theorem1");
  r = run_args({"select-omega", "--dist", "0.2,0.2,0.2,0.2,0.2"});
  EXPECT_EQ(r.code, kExitDegenerate);
  r = run_args({"select-omega", "--dist", "0.1,0.9", "--rule", "theorem3"});
  EXPECT_NEAR(json_of(r)["threshold"].get<double>(), 5.7565, 1e-4);
  EXPECT_TRUE(json_of(r)["binary_extension"].get<bool>());
  r = run_args({"select-omega", "--dist", "0.1,0.9", "--rule", "crossing"});
  EXPECT_NEAR(json_of(r)["threshold"].get<double>(), 5.5, 0.1);
  r = run_args({"select-omega", "--dist", "0.1,0.9", "--rule", "crossing", "--search-max", "1"});
  EXPECT_EQ(r.code, kExitDegenerate);
}

TEST(CliEstimatePrior, Examples) {
  auto r = run_args({"estimate-prior", "--lower", "0.01", "--upper", "0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = json_of(r);
  EXPECT_NEAR(j["p_hat"].get<double>(), 0.03909, 1e-4);
  EXPECT_NEAR(j["omega"].get<double>(), 25.584, 1e-3);
  EXPECT_LT(std::abs(j["residual"].get<double>()), 0.15);
  r = run_args({"estimate-prior", "--lower", "0.05", "--upper", "0.05"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json_of(r)["p_hat"].get<double>(), 0.05);
  EXPECT_EQ(run_args({"estimate-prior", "--lower", "0.1", "--upper", "0.01"}).code, kExitInvalid);
}

TEST(CliSweeps, OmegaSweepCsv) {
  const auto r = run_args({"sweep-omega", "--dist", "0.1,0.9", "--range", "0:12:0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  const SweepTable t = read_csv(in);
  EXPECT_EQ(t.rows().size(), 25u);
  EXPECT_EQ(t.rows().front()[1], 0.0);
  EXPECT_EQ(run_args({"sweep-omega", "--dist", "0.1,0.9", "--range", "5:1:0.5"}).code, kExitInvalid);
  EXPECT_EQ(run_args({"sweep-omega", "--dist", "0.1,0.9", "--range", "0:1"}).code, kExitInvalid);
}

TEST(CliSweeps, PSweepJson) {
  const auto r = run_args({"sweep-p", "--omega", "20", "--range", "0.05:0.95:0.05", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["columns"][0], "p0");
  EXPECT_EQ(j["rows"].size(), 19u);
  EXPECT_EQ(run_args({"sweep-p", "--omega", "1", "--range", "0:0.5:0.1"}).code, kExitInvalid);
}

TEST(CliChernoff, BinaryAndMary) {
  auto r = run_args({"chernoff", "--omega0", "0.5", "--mu0", "0", "--mu1", "2", "--sigma", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto j = json_of(r);
  EXPECT_NEAR(j["bound"].get<double>(), 0.30326, 1e-5);
  EXPECT_NEAR(j["oracle"].get<double>(), 0.15866, 1e-5);
  EXPECT_FALSE(j["clamped"].get<bool>());
  r = run_args({"chernoff", "--priors", "0.05,0.475,0.475", "--means", "-4,0,4", "--sigma", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  j = json_of(r);
  EXPECT_LE(j["oracle"].get<double>(), j["bound"].get<double>());
  EXPECT_EQ(run_args({"chernoff", "--priors", "0.5,0.5", "--means", "0"}).code, kExitInvalid);
}

TEST(CliCompare, ExcessColumns) {
  const auto r = run_args({"compare-worstcase", "--lower", "0.001", "--upper", "0.1", "--mu0", "0", "--mu1", "3",
                           "--points", "21"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  const SweepTable t = read_csv(in);
  EXPECT_EQ(t.columns(), (std::vector<std::string>{"omega_true", "err_worstcase", "err_mim", "err_ideal"}));
  EXPECT_EQ(t.rows().size(), 21u);

  const auto lin = run_args({"compare-worstcase", "--lower", "0.001", "--upper", "0.1", "--mu0", "0", "--mu1", "3",
                             "--points", "11", "--grid", "linear", "--format", "json"});
  ASSERT_EQ(lin.code, kExitOk) << lin.err;
  const auto j = json_of(lin);
  EXPECT_EQ(j["meta"]["grid"], "linear");
  EXPECT_NEAR(j["rows"][1][0].get<double>(), 0.001 + 0.0099, 1e-15);
}

TEST(CliFig, PresetsAndOutFile) {
  for (const char* which : {"1a", "1b", "3"}) {
    const auto r = run_args({"fig", "--which", which});
    EXPECT_EQ(r.code, kExitOk) << which << r.err;
  }
  EXPECT_EQ(run_args({"fig", "--which", "2"}).code, kExitInvalid);

  const std::string path = ::testing::TempDir() + "mim_fig3.csv";
  const auto r = run_args({"fig", "--which", "3", "--out", path});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const SweepTable t = read_csv(in);
  EXPECT_EQ(t.rows().size(), 401u);
  std::remove(path.c_str());
}

TEST(CliBinary, RunsAsProcess) {
  const std::string path = ::testing::TempDir() + "mim_eval.json";
  const std::string cmd = std::string(MIM_CLI_PATH) + " eval --dist 0.5,0.5 --omega 10 --out " + path;
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in)["mim"].get<double>(), 5.0);
  std::remove(path.c_str());
  const std::string bad = std::string(MIM_CLI_PATH) + " select-omega --dist 0.5,0.5 2>/dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kExitDegenerate);
}

}  // namespace
}  // namespace mim::cli
