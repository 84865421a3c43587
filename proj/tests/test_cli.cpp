#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(RRQ_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, VerifyFullRunExitsZero) {
  const CliRun r = run("verify");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
}

TEST(Cli, VerifyFilterJson) {
  const CliRun r = run("verify --filter 'T3*' --json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 2u);
  for (const auto& c : j) {
    EXPECT_EQ(c["id"].get<std::string>().rfind("T3", 0), 0u);
    EXPECT_EQ(c.size(), 10u);
  }
}

TEST(Cli, EpsPropagatesIntoTolerances) {
  const CliRun r = run("verify --filter RRCF.e2pi --json --eps 1e-4");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out)[0]["tolerance"], "0.01");
  const CliRun e = run("verify --filter RRCF.e2pi --json", "RRCF_EPS=1e-4");
  ASSERT_EQ(e.status, 0) << e.out;
  EXPECT_EQ(nlohmann::json::parse(e.out)[0]["tolerance"], "0.01");
}

TEST(Cli, BadFlagIsUsageError) {
  EXPECT_EQ(run("verify --bogus").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("verify --eps -1").status, 2);
}

TEST(Cli, EvalKernels) {
  CliRun r = run("eval rrcf 0.0018674427317079893");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("0.284079043840412", 0), 0u) << r.out;
  r = run("eval k_r 4");
  EXPECT_EQ(r.out.rfind("0.171572875253809", 0), 0u) << r.out;
  r = run("eval K 0");
  EXPECT_EQ(r.out.rfind("1.5707963267949", 0), 0u) << r.out;
  r = run("eval j 2");
  EXPECT_EQ(r.out.rfind("8000", 0), 0u) << r.out;
  r = run("eval m65 3");
  EXPECT_EQ(r.out.rfind("0.146446609406726", 0), 0u) << r.out;
  r = run("eval f1 0.5 0.5 0.5 1.5 -2 0.3");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("est. error"), std::string::npos);
}

TEST(Cli, EvalUsageAndDomainErrors) {
  EXPECT_EQ(run("eval nosuch 1").status, 2);
  EXPECT_EQ(run("eval rrcf").status, 2);
  EXPECT_EQ(run("eval rrcf abc").status, 2);
  EXPECT_EQ(run("eval rrcf 2").status, 1);
}

TEST(Cli, SolveSexticInstances) {
  CliRun r = run("solve-sextic 1 250 --j 1728");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("X        529.508497187"), std::string::npos) << r.out;
  r = run("solve-sextic 1 3 --j 4000");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("X        38.234279171789"), std::string::npos) << r.out;
  r = run("solve-sextic 1 250 12");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("X        529.508497187"), std::string::npos) << r.out;
}

TEST(Cli, SolveSexticErrors) {
  EXPECT_EQ(run("solve-sextic 0 1 1").status, 2);
  EXPECT_EQ(run("solve-sextic 1 250").status, 2);
  const CliRun r = run("solve-sextic 1 3 --j 1000");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("a X^2 + b X + b^2/(20a) = C1 X^(5/3)"), std::string::npos) << r.out;
}
