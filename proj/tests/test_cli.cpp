#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "hardymin/json_io.hpp"
#include "hardymin/verify.hpp"

using namespace hardymin;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hardymin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kZ = R"({"kind":"laurent","offset":1,"coeffs":[[1,0]]})";
const std::string kZSquared = R"({"kind":"blaschke_quotient","constant":[1,0],"z_power":2,"zeros":[]})";
const std::string kStepPlus3i =
    R"({"kind":"sum","left":{"kind":"piecewise","arcs":[{"from":0,"to":3.141592653589793,"value":[1,0]},)"
    R"({"from":3.141592653589793,"to":6.283185307179586,"value":[-1,0]}]},"constant":[0,3]})";

}  // namespace

TEST(CliMinmod, ShiftOnZSquared) {
  const auto r = run({"minmod", "--inner", kZSquared, "--symbol", kZ});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["value"].get<double>(), 0.0);
  EXPECT_EQ(j["oracle"].get<double>(), 0.0);
  EXPECT_EQ(j["discrepancy"].get<double>(), 0.0);
  EXPECT_EQ(j["method"], "finite_exact");
}

TEST(CliMinmod, SingleFactorShiftMatchesOracle) {
  const auto r = run({"minmod", "--inner", R"({"zeros":[[0.5,0]]})", "--symbol", kZ});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(j["oracle"].get<double>(), 0.5);
}

TEST(CliMinmod, ForcedSweep) {
  const auto r = run({"minmod", "--inner", R"({"zeros":[[0.5,0]]})", "--symbol", kZ, "--force-method", "galerkin_sweep"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["method"], "galerkin_sweep");
  EXPECT_EQ(j["truncation"], 64);
  EXPECT_NEAR(j["value"].get<double>(), 0.5, 1e-9);
}

TEST(CliMinmod, StepPlus3iBounds) {
  const auto r = run({"minmod", "--symbol", kStepPlus3i});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["method"], "bounds");
  EXPECT_NEAR(j["lower"].get<double>(), 3.0, 1e-12);
  EXPECT_NEAR(j["upper"].get<double>(), std::sqrt(10.0), 1e-12);
}

TEST(CliMinmod, ConstantSymbolUsesOracle) {
  const auto r = run({"minmod", "--symbol", R"({"kind":"laurent","offset":0,"coeffs":[[0,1]]})", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("value,method,", 0), 0u);
  EXPECT_NE(r.out.find("1,oracle,"), std::string::npos);
}

TEST(CliMinmod, SymbolFromFileAndOutputFile) {
  const std::string in = ::testing::TempDir() + "sym.json", out = ::testing::TempDir() + "out.json";
  std::ofstream(in) << kZ;
  const auto r = run({"minmod", "--inner", kZSquared, "--symbol", in, "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(Json::parse(ss.str())["value"].get<double>(), 0.0);
  std::remove(in.c_str());
  std::remove(out.c_str());
}

TEST(CliMinmod, Deterministic) {
  const std::vector<std::string> args{"minmod", "--inner", R"({"zeros":[[0.3,0.2],[-0.5,0]]})", "--symbol",
                                      R"({"kind":"blaschke_quotient","z_power":-1,"zeros":[[0.4,0]]})"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliExitCodes, InputErrors) {
  EXPECT_EQ(run({"minmod", "--symbol", "{bad"}).code, 2);
  EXPECT_EQ(run({"minmod", "--symbol", "/no/such/file.json"}).code, 2);
  EXPECT_EQ(run({"minmod", "--symbol", R"({"kind":"mystery"})"}).code, 2);
  EXPECT_EQ(run({"minmod", "--symbol", kZ, "--inner", R"({"zeros":[[1.5,0]]})"}).code, 2);
  EXPECT_EQ(run({"minmod", "--symbol", kZ, "--inner", kZSquared, "--tol", "-1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--symbol", kZ, "--inner", kZSquared, "--truncations", "8,4"}).code, 2);
  EXPECT_EQ(run({"sweep", "--symbol", kZ, "--inner", kZSquared}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliExitCodes, UnsupportedSymbol) {
  // z + i z^-1 is neither unimodular, analytic, nor real plus a constant.
  const auto r = run({"minmod", "--inner", kZSquared, "--symbol", R"({"kind":"laurent","offset":-1,"coeffs":[[0,1],[0,0],[1,0]]})"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("supported symbol classes"), std::string::npos);
}

TEST(CliSweep, CsvTable) {
  const auto r = run({"sweep", "--inner", R"({"zeros":[[0.3,0],[0.6,0]]})", "--symbol", kZ, "--truncations", "8,16,32,64"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,value,entry_error");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows.back().rfind("64,0.18", 0), 0u);
}

TEST(CliSweep, ConstantColumnOfOnes) {
  const auto r = run({"sweep", "--inner", R"({"zeros":[[0.3,0]]})", "--symbol", R"({"kind":"laurent","offset":0,"coeffs":[[1,0]]})",
                      "--truncations", "2,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("2,1,"), std::string::npos);
  EXPECT_NE(r.out.find("4,1,"), std::string::npos);
}

TEST(CliVerify, PassesAndNegativeControlFails) {
  const auto ok = run({"verify"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);
  const auto bad = run({"verify", "--perturb", "compressed_shift_min_modulus"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL compressed_shift_min_modulus"), std::string::npos);
  EXPECT_EQ(run({"verify", "--perturb", "no_such_item"}).code, 2);
}

TEST(CliVerify, EmptySummaryDoesNotPass) { EXPECT_FALSE(VerifySummary{}.passed()); }

TEST(JsonIo, SymbolRoundTrip) {
  for (const auto& text : {kZ, kZSquared, kStepPlus3i, std::string(R"({"kind":"conjugate","of":)") + kZSquared + "}"}) {
    const auto j = Json::parse(text);
    const auto again = symbol_to_json(symbol_from_json(j));
    EXPECT_EQ(symbol_to_json(symbol_from_json(again)), again);
    for (double t : {0.1, 1.0, 4.0}) EXPECT_EQ(eval_symbol(symbol_from_json(again), t), eval_symbol(symbol_from_json(j), t));
  }
}

TEST(JsonIo, InnerAcceptsZPower) {
  const auto u = inner_from_json(Json::parse(kZSquared));
  EXPECT_EQ(u.degree(), 2);
  EXPECT_TRUE(u.vanishes_at_origin());
  EXPECT_THROW(inner_from_json(Json::parse(R"({"z_power":-1})")), std::invalid_argument);
  EXPECT_THROW(inner_from_json(Json::parse(R"({"kind":"laurent"})")), std::invalid_argument);
}

TEST(JsonIo, MatrixCsvAndEnvelope) {
  OperatorMatrix m{Eigen::MatrixXcd::Identity(2, 2) * Complex(1, -2), {{"z^n", 0, 1}}, {{"z^n", 0, 1}}, 1e-3};
  EXPECT_EQ(matrix_to_csv(m), "\"1,-2\",\"0,0\"\n\"0,0\",\"1,-2\"\n");
  const auto j = matrix_to_json(m);
  EXPECT_EQ(j["entry_error"].get<double>(), 1e-3);
  EXPECT_EQ(j["in_basis"][0]["family"], "z^n");
}

TEST(JsonIo, ReportKeys) {
  MinModReport r;
  r.value = 0.5;
  r.truncation = 8;
  r.attach_oracle(0.5);
  const auto j = report_to_json(r);
  for (const char* k : {"value", "method", "truncation", "oracle", "discrepancy", "entry_error"}) EXPECT_TRUE(j.contains(k)) << k;
}

TEST(JsonIo, BasisExport) {
  const auto j = basis_to_json(tm_basis(BlaschkeProduct({0.5, 0.1}), 1e-10));
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["basis"].size(), 2u);
}
