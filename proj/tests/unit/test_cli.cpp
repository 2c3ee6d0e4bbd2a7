#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "fracdiff/cli.hpp"

using namespace fracdiff;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream o, e;
  const int c = cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

fs::path scratch_dir(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("fracdiff_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Cli, EvalPrintsValueAndError) {
  const auto r = run({"eval", "ks", "--alpha", "0.75", "--m", "0.333333", "--l", "-0.666667", "--z", "-0.25"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  double v = 0, e = -1;
  in >> v >> e;
  ASSERT_TRUE(in);
  EXPECT_NEAR(v, 0.6428385522964921, 1e-12);
  EXPECT_GE(e, 0.0);
  EXPECT_LT(e, 1e-10);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"eval", "nosuch", "--z", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "gamma", "--z", "1", "--bogus", "3"}).code, 2);
  EXPECT_EQ(run({"density", "mcbride", "--alpha", "1.5", "--hurst", "0.5"}).code, 2);
  EXPECT_EQ(run({"simulate", "fbm", "--hurst", "0.5", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nosuch"}).code, 2);
}

TEST(Cli, PoleIsAUsageError) { EXPECT_EQ(run({"eval", "gamma", "--z", "-2"}).code, 2); }

TEST(Cli, FailedVerifyRowExitsThreeAndStillWritesReport) {
  // the ode suite carries an order row that misses its bound at nu = 0.9
  const auto d = scratch_dir("verify_ode");
  const auto r = run({"verify", "--suite", "ode", "--out", (d / "ode.json").string(), "--format", "json"});
  EXPECT_EQ(r.code, 3);
  const auto j = nlohmann::json::parse(io::read_text((d / "ode.json").string()));
  EXPECT_FALSE(j.at("passed").get<bool>());
}

TEST(Cli, DensityExampleIntegratesToOne) {
  const auto r = run({"density", "mcbride", "--alpha", "0.5", "--hurst", "0.5", "--t", "1", "--xmax", "5", "--n", "201"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto tab = io::parse_csv(r.out);
  ASSERT_EQ(tab.rows.size(), 201u);
  const auto x = tab.numeric("x"), v = tab.numeric("value");
  double s = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i) s += 0.5 * (x[i] - x[i - 1]) * (v[i] + v[i - 1]);
  EXPECT_NEAR(s, 1.0, 1e-4);
}

TEST(Cli, DensityColumns) {
  const auto r = run({"density", "caputo", "--nu", "0.75", "--hurst", "0.25", "--xmax", "3", "--n", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto tab = io::parse_csv(r.out);
  EXPECT_EQ(tab.header, (std::vector<std::string>{"x", "value", "method", "t", "model", "alpha", "hurst", "nu", "korder"}));
  EXPECT_EQ(tab.rows.size(), 7u);
}

TEST(Cli, CsvRoundTripIsBitExact) {
  const auto d = scratch_dir("roundtrip");
  const auto path = (d / "s.csv").string();
  const auto r = run({"simulate", "fbm", "--hurst", "0.3", "--t", "1.7", "--n", "2000", "--seed", "5", "--raw", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto raw = io::parse_csv(io::read_text((d / "s_samples.csv").string()));
  const auto vals = raw.numeric(raw.header.back());
  const auto batch = mc::sample_fbm_marginal(0.3, 1.7, 2000, {5, 0});
  ASSERT_EQ(vals.size(), batch.values.size());
  for (std::size_t i = 0; i < vals.size(); ++i) ASSERT_EQ(vals[i], batch.values[i]) << i;
  // and a second write of the parsed table is byte-identical
  EXPECT_EQ(io::to_csv(raw), io::read_text((d / "s_samples.csv").string()));
}

TEST(Cli, JsonCarriesSchemaVersion) {
  for (const std::vector<std::string>& a :
       {std::vector<std::string>{"moments", "mcbride", "--alpha", "0.5", "--hurst", "0.3", "--format", "json"},
        std::vector<std::string>{"density", "mcbride", "--alpha", "0.5", "--hurst", "0.5", "--n", "5", "--format", "json"},
        std::vector<std::string>{"simulate", "stable", "--alpha", "1.5", "--n", "100", "--format", "json"},
        std::vector<std::string>{"verify", "--suite", "specfun", "--format", "json"}}) {
    const auto r = run(a);
    ASSERT_EQ(r.code, 0) << a[0] << ' ' << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("schema_version"), 1) << a[0];
  }
}

TEST(Cli, VerifyIsDeterministicAndEchoesTolerances) {
  const auto a = run({"verify", "--suite", "specfun", "--seed", "42"});
  const auto b = run({"verify", "--suite", "specfun", "--seed", "42"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# tolerance frozen_value_rel="), std::string::npos);
  const auto tab = io::parse_csv(a.out);
  EXPECT_EQ(tab.header, (std::vector<std::string>{"suite", "case_id", "metric", "tolerance", "passed", "lhs_provenance",
                                                  "rhs_provenance", "criterion"}));
  std::vector<std::string> ids;
  for (const auto& row : tab.rows) ids.push_back(row[tab.column("case_id")]);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
}

TEST(Cli, VerifyAllPasses) {
  const auto d = scratch_dir("verify_all");
  const auto r = run({"verify", "--suite", "all", "--seed", "42", "--out", (d / "all.csv").string()});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(fs::exists(d / "all.csv"));
}

TEST(Cli, OutDirEnvironment) {
  const auto d = scratch_dir("env");
  ::setenv("FRACDIFF_OUT_DIR", d.c_str(), 1);
  const auto r = run({"moments", "mcbride", "--alpha", "0.5", "--hurst", "0.5", "--max-moment", "3"});
  const auto e = run({"moments", "mcbride", "--alpha", "0.5", "--hurst", "0.5", "--out", (d / "x.csv").string()});
  ::unsetenv("FRACDIFF_OUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(d / "moments_mcbride.csv"));
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(fs::exists(d / "x.csv"));
}
