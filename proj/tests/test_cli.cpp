#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "test_util.hpp"

#include "locmod/cli/commands.hpp"

using namespace locmod;
using namespace locmod::cli;

namespace {

RunConfig chart_config(int n, int s) {
  RunConfig c;
  c.command = Command::VerifyChart;
  c.family = Family::OddM;
  c.n = n;
  c.s = s;
  return c;
}

int exit_code_of(const std::string& args, const std::string& out_file = "/dev/null") {
  const std::string cmd = std::string(LOCMOD_CLI_PATH) + " " + args + " > " + out_file + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

std::size_t csv_rows(const std::string& csv, const std::string& section) {
  std::size_t n = 0;
  std::istringstream is(csv);
  for (std::string line; std::getline(is, line);)
    if (line.rfind(section + ",", 0) == 0) ++n;
  return n;
}

}  // namespace

TEST(Cli, VerifyChartReportsRsAndPasses) {
  auto rep = run(chart_config(5, 2));
  EXPECT_TRUE(rep.passed());
  bool saw = false;
  for (const auto& c : rep.counts)
    if (c.name == "free_vars") {
      EXPECT_EQ(c.value, 6u);
      saw = true;
    }
  EXPECT_TRUE(saw);
}

TEST(Cli, JsonAndCsvCarryTheSameContent) {
  RunConfig c;
  c.command = Command::Census;
  c.census = CensusKind::ZeroFiber;
  c.m = 2;
  c.s = 2;
  c.q_list = {3, 5};
  auto rep = run(c);
  ASSERT_TRUE(rep.passed());
  auto j = nlohmann::json::parse(render(rep, "json"));
  const std::string csv = render(rep, "csv");
  EXPECT_EQ(j["checks"].size(), csv_rows(csv, "check"));
  EXPECT_EQ(j["counts"].size(), csv_rows(csv, "count"));
  EXPECT_EQ(j["dims"].size(), csv_rows(csv, "dim"));
  EXPECT_EQ(j["dims"][0]["estimate"], 4);
  EXPECT_NE(csv.find("count,"), std::string::npos);
  EXPECT_NE(csv.find(",625,"), std::string::npos);
}

TEST(Cli, OutputIsDeterministicWithoutTimings) {
  RunConfig c;
  c.command = Command::Symplectic;
  c.trials = 50;
  c.seed = 7;
  auto a = run(c), b = run(c);
  EXPECT_EQ(render(a, "json", false), render(b, "json", false));
  EXPECT_EQ(render(a, "csv", false), render(b, "csv", false));
  EXPECT_TRUE(a.passed());
}

TEST(Cli, BadParametersAreUsageErrors) {
  EXPECT_THROW(run(chart_config(4, 1)), UsageError);
  RunConfig c;
  c.command = Command::Census;
  c.m = 2;
  c.s = 1;
  c.q_list = {2};
  EXPECT_THROW(run(c), UsageError);
  RunConfig f = chart_config(5, 1);
  f.format = "xml";
  EXPECT_THROW(run(f), UsageError);
}

TEST(Cli, LibraryErrorsLandInTheReport) {
  RunConfig c;
  c.command = Command::Oracle;
  c.family = Family::OddM;
  c.n = 5;
  c.s = 1;
  c.q_list = {3};
  auto rep = run(c);
  ASSERT_TRUE(rep.error.has_value());
  EXPECT_NE(rep.error->find("TooLarge"), std::string::npos);
  EXPECT_FALSE(rep.passed());
}

TEST(Cli, BinaryExitCodes) {
  const std::string tmp = ::testing::TempDir() + "locmod_cli_out.json";
  EXPECT_EQ(exit_code_of("verify-chart --case odd-m --n 5 --s 2", tmp), 0);
  auto j = nlohmann::json::parse(slurp(tmp));
  EXPECT_EQ(j["command"], "verify-chart");
  EXPECT_TRUE(j["passed"].get<bool>());
  // characteristic 2: the raw set is not the parameterized set
  EXPECT_EQ(exit_code_of("oracle --case odd-m --n 3 --s 1 --q 2"), 1);
  EXPECT_EQ(exit_code_of("oracle --case odd-m --n 3 --s 1 --q 3"), 0);
  EXPECT_EQ(exit_code_of("verify-chart --case odd-m --n 4 --s 1"), 2);
  EXPECT_EQ(exit_code_of("census --m 2 --s 1 --q 3"), 2);
  EXPECT_EQ(exit_code_of("census --zero-fiber --n-scheme --m 2 --s 1 --q 3"), 2);
  EXPECT_EQ(exit_code_of("census --zero-fiber --m 2 --s 1 --q 3,x"), 2);
  EXPECT_EQ(exit_code_of("no-such-command"), 2);
  EXPECT_EQ(exit_code_of("census --zero-fiber --m 2 --s 2 --q 3,5 --format csv"), 0);
}
