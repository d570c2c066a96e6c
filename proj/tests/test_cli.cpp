#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "vbs/cli.hpp"
#include "vbs/report.hpp"

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "vbsent");
  std::ostringstream out, err;
  const int code = vbs::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

TEST(Cli, PeriodicSpectrumFrozen) {
  const CliRun r = run({"spectrum", "--n", "2", "--boundary", "periodic", "--chain", "4", "--block", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], vbs::csv_header());
  const vbs::ResultRow row = vbs::row_from_csv(rows[1]);
  EXPECT_EQ(row.chain, 4);
  EXPECT_NEAR(row.lambda_singlet, 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(row.lambda_adjoint, 4.0 / 21.0, 1e-15);
}

TEST(Cli, OpenRowsUseMinusOneAndLexOrder) {
  const CliRun r = run({"spectrum", "--n", "3,2", "--block", "2..3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::vector<std::string> rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  const vbs::ResultRow first = vbs::row_from_csv(rows[1]);
  const vbs::ResultRow last = vbs::row_from_csv(rows[4]);
  EXPECT_EQ(first.n, 2);
  EXPECT_EQ(first.block, 2);
  EXPECT_EQ(first.chain, -1);
  EXPECT_EQ(last.n, 3);
  EXPECT_EQ(last.block, 3);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"entropy", "--n", "2..3", "--boundary", "periodic", "--chain", "3..5",
                                         "--block", "1..2", "--alpha", "0.5,2", "--format", "json"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(nlohmann::json::parse(a.out).size(), 2u * 3u * 2u * 2u);
}

TEST(Cli, EntropyWithVerify) {
  const CliRun r = run({"entropy", "--n", "2", "--block", "2", "--chain", "4", "--alpha", "2", "--verify"});
  ASSERT_EQ(r.code, 0) << r.err;
  const vbs::ResultRow row = vbs::row_from_csv(lines(r.out)[1]);
  EXPECT_NEAR(row.entropy, 1.3689223607402194, 1e-14);
  ASSERT_TRUE(row.renyi.has_value());
  EXPECT_NEAR(row.renyi->real(), std::log(27.0 / 7.0), 1e-14);
  ASSERT_TRUE(row.verified.has_value());
  EXPECT_TRUE(*row.verified);
  EXPECT_LT(*row.max_dev, 1e-10);
}

TEST(Cli, LogBaseTwo) {
  const CliRun r = run({"entropy", "--n", "2", "--block", "1", "--log-base", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(vbs::row_from_csv(lines(r.out)[1]).entropy, std::log2(3.0), 1e-14);
}

TEST(Cli, BranchPointAlphaIsFlagged) {
  const CliRun bp = run({"branch-points", "--n", "2", "--block", "2", "--m", "0", "--format", "json"});
  ASSERT_EQ(bp.code, 0) << bp.err;
  const nlohmann::json table = nlohmann::json::parse(bp.out);
  ASSERT_EQ(table.size(), 2u);
  const vbs::Complex alpha(table[0]["alpha_re"].get<double>(), table[0]["alpha_im"].get<double>());
  const CliRun r = run({"entropy", "--n", "2", "--block", "2", "--alpha", vbs::format_alpha(alpha)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("branch point"), std::string::npos);
  const vbs::ResultRow row = vbs::row_from_csv(lines(r.out)[1]);
  EXPECT_TRUE(row.alpha.has_value());
  EXPECT_FALSE(row.renyi.has_value());
}

TEST(Cli, BranchPointsCsv) {
  const CliRun r = run({"branch-points", "--n", "2", "--block", "2..3", "--m", "0..1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::vector<std::string> rows = lines(r.out);
  EXPECT_EQ(rows[0], "n,L,m,sign,alpha_re,alpha_im,residual,even_L");
  EXPECT_EQ(rows.size(), 1u + 2u * 2u * 2u);
  EXPECT_NE(rows[1].find(",true"), std::string::npos);
  EXPECT_NE(rows.back().find(",false"), std::string::npos);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run({"branch-points", "--n", "2", "--block", "1"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--n", "2", "--boundary", "periodic", "--chain", "3", "--block", "4"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--n", "1", "--block", "2"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"spectrum", "--n", "2", "--block", "2", "--boundary", "closed"}).code, 2);
  EXPECT_EQ(run({"entropy", "--n", "2", "--block", "2", "--alpha", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--only", "no-such-check"}).code, 2);
}

TEST(Cli, BudgetErrorsExitThreeWithoutOutput) {
  const CliRun r = run({"spectrum", "--n", "2", "--block", "2", "--boundary", "periodic", "--chain", "30", "--verify"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  const CliRun v = run({"verify", "--budget-amps", "100"});
  EXPECT_EQ(v.code, 3);
  EXPECT_TRUE(v.out.empty());
}

TEST(Cli, ClosedFormNeedsNoBudget) {
  const CliRun r = run({"spectrum", "--n", "2", "--boundary", "periodic", "--chain", "1000", "--block", "500"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, VerifySubsetJson) {
  const CliRun r = run({"verify", "--only", "open-spectrum,swap-identity", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const nlohmann::json summary = nlohmann::json::parse(r.out);
  EXPECT_TRUE(summary["passed"].get<bool>());
  EXPECT_EQ(summary["checks"].size(), 2u);
}

TEST(Cli, VerifyTextLines) {
  const CliRun r = run({"verify", "--n", "2", "--only", "saturation"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("PASS saturation", 0), 0u) << r.out;
}

TEST(Cli, WritesOutFile) {
  const std::string path = ::testing::TempDir() + "vbsent_out.csv";
  const CliRun r = run({"spectrum", "--n", "2", "--block", "2", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, vbs::csv_header());
  std::remove(path.c_str());
}

TEST(Cli, EnvironmentBudget) {
  ::setenv(vbs::cli::kBudgetEnvVar, "10", 1);
  const CliRun r = run({"spectrum", "--n", "2", "--block", "2", "--verify"});
  ::unsetenv(vbs::cli::kBudgetEnvVar);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(run({"spectrum", "--n", "2", "--block", "2", "--verify"}).code, 0);
}

}  // namespace
