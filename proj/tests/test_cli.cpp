#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace homspace::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "homspace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, RiemannianEinsteinOnCp3AsJson) {
  const CliRun r = run_cli({"einstein", "riemannian", "--space", "cp3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["space"], "cp3");
  for (const char* key : {"metric", "params", "result", "residuals", "tolerances"}) EXPECT_TRUE(j.contains(key));
  const auto& c = j["result"]["coefficients"];
  EXPECT_NEAR(c[0].get<double>(), -4.0, 1e-10);
  EXPECT_NEAR(c[1].get<double>(), 6.0, 1e-10);
  EXPECT_NEAR(c[2].get<double>(), -2.0, 1e-10);
  EXPECT_NEAR(j["result"]["roots"][0].get<double>(), 0.5, 1e-10);
  EXPECT_NEAR(j["result"]["roots"][1].get<double>(), 1.0, 1e-10);
}

TEST(Cli, FloatsCarrySeventeenSignificantDigits) {
  const CliRun r = run_cli({"einstein", "riemannian", "--space", "cp3", "--format", "json"});
  // 1e-9 prints as 1.0000000000000001e-09 at 17 digits.
  EXPECT_NE(r.out.find("1.0000000000000001e-09"), std::string::npos);
}

TEST(Cli, HomdimOnSixSphere) {
  const CliRun r = run_cli({"homdim", "--space", "sphere-s6", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["result"]["dimension"], 2);
  EXPECT_EQ(j["result"]["skew"], 2);
  EXPECT_EQ(j["result"]["symmetric"], 0);
}

TEST(Cli, KillingEinsteinRowsForC) {
  const CliRun r = run_cli({"catalog", "list", "--family", "C", "--lmax", "8", "--killing-einstein", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = json_of(r)["result"]["rows"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["l"], 2);
  EXPECT_EQ(rows[0]["p"], 1);
  EXPECT_EQ(rows[1]["l"], 5);
  EXPECT_EQ(rows[1]["p"], 3);
  EXPECT_EQ(rows[2]["l"], 8);
  EXPECT_EQ(rows[2]["p"], 5);
}

TEST(Cli, CsvRowsHaveAHeader) {
  const CliRun r = run_cli({"catalog", "list", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,family,dim_m,d1,d2");
  // Ids containing commas are quoted.
  EXPECT_NE(r.out.find("\"flag-C(5,3)\",flag-C,36,24,12"), std::string::npos);
}

TEST(Cli, TensorModes) {
  const CliRun ric = run_cli({"tensor", "ricci", "--space", "cp3", "--s", "2", "--t", "0.3", "--format", "json"});
  ASSERT_EQ(ric.code, 0) << ric.err;
  EXPECT_LT(json_of(ric)["residuals"]["closed_form_vs_curvature"].get<double>(), 1e-8);
  EXPECT_DOUBLE_EQ(json_of(ric)["metric"]["t"].get<double>(), 0.3);

  const CliRun tor = run_cli({"tensor", "torsion", "--space", "lie-group(su2)", "--alpha", "2", "--format", "json"});
  ASSERT_EQ(tor.code, 0) << tor.err;
  EXPECT_NEAR(json_of(tor)["result"]["norm_sq"].get<double>(), 2.0, 1e-9);

  const CliRun sc = run_cli({"tensor", "scalar", "--space", "sphere-s7", "--alpha", "0.5", "--format", "json"});
  ASSERT_EQ(sc.code, 0) << sc.err;
  EXPECT_LT(json_of(sc)["residuals"]["scal_minus_riemannian_plus_three_halves_torsion"].get<double>(), 1e-8);
}

TEST(Cli, InvalidInputExitsWithTwo) {
  EXPECT_EQ(run_cli({"space", "build", "sphere-s5"}).code, 2);
  EXPECT_EQ(run_cli({"tensor", "ricci", "--space", "cp3", "--alpha", "1", "--s", "1", "--t", "1"}).code, 2);
  EXPECT_EQ(run_cli({"tensor", "ricci", "--space", "sphere-s7", "--s", "1", "--t", "1"}).code, 2);
  EXPECT_EQ(run_cli({"einstein", "riemannian", "--space", "sphere-s7"}).code, 2);
  EXPECT_EQ(run_cli({"homdim", "--space", "flag-C(5,3)"}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "catalog", "list"}).code, 2);
  EXPECT_EQ(run_cli({"check", "--space", "cp3", "--suite", "nope"}).code, 2);
}

TEST(Cli, CheckSuitePassesOnCp3) {
  const CliRun r = run_cli({"check", "--space", "cp3", "--suite", "all", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json_of(r)["result"]["failed"], 0);
}

TEST(Cli, NormalizationFlagChangesCasimir) {
  const CliRun r = run_cli({"--normalization", "negK", "space", "build", "cp3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json_of(r)["result"]["casimir"][0].get<double>(), 1.0 / 3.0, 1e-12);
}

TEST(Cli, OutWritesToFile) {
  const std::string path = ::testing::TempDir() + "homspace_cli_out.json";
  const CliRun r = run_cli({"homdim", "--space", "sphere-s7", "--format", "json", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["result"]["dimension"], 1);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace homspace::cli
