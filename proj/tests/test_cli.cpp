#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

struct CliResult {
  std::string out;
  int exit_code = -1;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(BETAEXACT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  CliResult r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0) {
    r.out.append(buf, n);
  }
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

TEST(CliEval, ExactHeadlineValues) {
  CliResult b1 = run_cli("eval beta 1 --format exact");
  EXPECT_EQ(b1.out, "1/4 * pi\n");
  EXPECT_EQ(b1.exit_code, 0);
  CliResult b3 = run_cli("eval beta 3 --format exact");
  EXPECT_EQ(b3.out, "1/32 * pi^3\n");
  EXPECT_EQ(b3.exit_code, 0);
  CliResult b5 = run_cli("eval beta 5 --format exact");
  EXPECT_EQ(b5.out, "5/1536 * pi^5\n");
  EXPECT_EQ(b5.exit_code, 0);
}

TEST(CliEval, DecimalOutput) {
  CliResult r = run_cli("eval zeta 2 --format decimal --digits 10");
  EXPECT_EQ(r.out, "1.6449340668\n");
  EXPECT_EQ(r.exit_code, 0);
  CliResult lam = run_cli("eval lambda 2 --format decimal --digits 10");
  EXPECT_EQ(lam.out, "1.2337005501\n");
  EXPECT_EQ(lam.exit_code, 0);
}

TEST(CliEval, ParityAndRangeRejection) {
  for (const char* bad : {"eval beta 4", "eval beta 0", "eval beta -3",
                          "eval zeta 3", "eval zeta 0", "eval lambda 5"}) {
    CliResult r = run_cli(bad);
    EXPECT_EQ(r.exit_code, 2) << bad;
    EXPECT_TRUE(r.out.empty()) << bad;
  }
}

TEST(CliEval, JsonRoundTripsToExactFormat) {
  CliResult j = run_cli("eval beta 5 --format json");
  ASSERT_EQ(j.exit_code, 0);
  const std::string prefix =
      "{\"function\":\"beta\",\"argument\":5,\"coeff_num\":\"5\","
      "\"coeff_den\":\"1536\",\"pi_power\":5,\"decimal\":\"";
  EXPECT_EQ(j.out.rfind(prefix, 0), 0u) << j.out;

  nlohmann::json parsed = nlohmann::json::parse(j.out);
  std::string exact = parsed["coeff_num"].get<std::string>() + "/" +
                      parsed["coeff_den"].get<std::string>();
  int p = parsed["pi_power"].get<int>();
  if (p == 1) {
    exact += " * pi";
  } else if (p > 1) {
    exact += " * pi^" + std::to_string(p);
  }
  CliResult e = run_cli("eval beta 5 --format exact");
  EXPECT_EQ(exact + "\n", e.out);

  CliResult d = run_cli("eval beta 5 --format decimal");
  EXPECT_EQ(parsed["decimal"].get<std::string>() + "\n", d.out);
}

TEST(CliTable, RowsAreArgExactDecimal) {
  CliResult r = run_cli("table beta --max-order 3 --digits 12");
  EXPECT_EQ(r.out,
            "1\t1/4 * pi\t0.785398163397\n"
            "3\t1/32 * pi^3\t0.968946146259\n"
            "5\t5/1536 * pi^5\t0.996157828077\n");
  EXPECT_EQ(r.exit_code, 0);

  CliResult z = run_cli("table zeta --max-order 1");
  EXPECT_EQ(z.out, "2\t1/6 * pi^2\t1.644934066848226436472415166646\n");
  EXPECT_EQ(z.exit_code, 0);
}

TEST(CliTable, OrderZeroIsEmptySuccess) {
  CliResult r = run_cli("table beta --max-order 0");
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(CliOracle, SeriesValuesWithBound) {
  CliResult b = run_cli("oracle beta 1 --digits 20");
  std::vector<std::string> blines = lines_of(b.out);
  ASSERT_EQ(blines.size(), 2u);
  EXPECT_EQ(blines[0], "0.78539816339744830961");
  EXPECT_EQ(blines[1].rfind("error_bound ", 0), 0u);
  EXPECT_EQ(b.exit_code, 0);

  CliResult z = run_cli("oracle zeta 2 --digits 10");
  std::vector<std::string> zlines = lines_of(z.out);
  ASSERT_EQ(zlines.size(), 2u);
  EXPECT_EQ(zlines[0], "1.6449340668");
  EXPECT_EQ(z.exit_code, 0);
}

TEST(CliOracle, AgreesWithEvalAcrossLayers) {
  CliResult o = run_cli("oracle beta 3 --digits 30");
  CliResult e = run_cli("eval beta 3 --format decimal --digits 30");
  ASSERT_EQ(o.exit_code, 0);
  ASSERT_EQ(e.exit_code, 0);
  EXPECT_EQ(lines_of(o.out)[0] + "\n", e.out);
}

TEST(CliVerify, RoutesSuitePassesWithCheckLines) {
  CliResult r = run_cli("verify --suite routes --max-order 3");
  EXPECT_EQ(r.exit_code, 0);
  std::vector<std::string> lines = lines_of(r.out);
  EXPECT_EQ(lines.size(), 12u);
  for (const std::string& line : lines) {
    EXPECT_EQ(line.rfind("CHECK ", 0), 0u) << line;
    EXPECT_NE(line.find(" residual="), std::string::npos) << line;
    EXPECT_NE(line.find(" tol="), std::string::npos) << line;
    EXPECT_EQ(line.substr(line.size() - 5), " PASS") << line;
  }
}

TEST(CliVerify, DeterministicOutput) {
  CliResult a = run_cli("verify --suite wz --max-order 4 --digits 15");
  CliResult b = run_cli("verify --suite wz --max-order 4 --digits 15");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit_code, 0);
}

TEST(CliVerify, ImpossibleToleranceFails) {
  CliResult r = run_cli("verify --suite oracle --max-order 2 --tolerance 1e-40");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find(" FAIL"), std::string::npos);
}

TEST(CliCapacity, EnvVarOverridesLimit) {
  CliResult blocked = run_cli("eval zeta 40", "BETA_EXACT_TABLE_MAX=10");
  EXPECT_EQ(blocked.exit_code, 3);

  CliResult deflt = run_cli("eval zeta 300");
  EXPECT_EQ(deflt.exit_code, 3);

  CliResult allowed = run_cli("eval zeta 40", "BETA_EXACT_TABLE_MAX=50");
  EXPECT_EQ(allowed.exit_code, 0);
  EXPECT_NE(allowed.out.find(" * pi^40"), std::string::npos);

  CliResult garbage = run_cli("eval zeta 2", "BETA_EXACT_TABLE_MAX=abc");
  EXPECT_EQ(garbage.exit_code, 2);
}

TEST(CliUsage, BadInvocationsExitTwo) {
  EXPECT_EQ(run_cli("nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("eval").exit_code, 2);
  EXPECT_EQ(run_cli("eval gamma 3").exit_code, 2);
  EXPECT_EQ(run_cli("verify --suite bogus").exit_code, 2);
  EXPECT_EQ(run_cli("eval beta 3 --digits 0").exit_code, 2);
  EXPECT_EQ(run_cli("eval beta 3 --format yaml").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
}

}  // namespace
