#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Invocation {
  int code;
  std::string out;
};

Invocation drg(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + DRG_CLI_PATH + " " + args + " 2>/dev/null";
  Invocation r{-1, ""};
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("drg_cli_" + name)).string(); }

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(drg("").code, 2);
  EXPECT_EQ(drg("frobnicate").code, 2);
  EXPECT_EQ(drg("feasible '{1,2;3'").code, 3);
  EXPECT_EQ(drg("spectrum /nonexistent/file").code, 4);
  EXPECT_EQ(drg("construct paley:15").code, 5);
  EXPECT_EQ(drg("construct nope").code, 5);
  EXPECT_EQ(drg("local-check /dev/null --t x").code, 2);
  EXPECT_EQ(drg("scan diam4").code, 2);
  EXPECT_EQ(drg("--help").code, 0);
  // negative answers are still successes
  EXPECT_EQ(drg("feasible '{21,12,1;1,4,21}'").code, 0);
  EXPECT_EQ(drg("spectrum '{14,6;1,8}'").code, 0);
  EXPECT_EQ(drg("verify thm-1-1").code, 1);
  EXPECT_EQ(drg("verify thm-1-2").code, 0);
}

TEST(Cli, ConstructThenAnalyse) {
  std::string f = temp_path("shrikhande.txt");
  ASSERT_EQ(drg("construct shrikhande -o " + f).code, 0);
  Invocation s = drg("--json spectrum " + f);
  ASSERT_EQ(s.code, 0);
  auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["record"], "spectrum");
  EXPECT_EQ(j["eigenvalues"].size(), 3u);
  Invocation l = drg("--json local-check " + f);
  ASSERT_EQ(l.code, 0);
  auto lj = nlohmann::json::parse(l.out);
  EXPECT_TRUE(lj["all_pass"].get<bool>());
  Invocation strict = drg("--json local-check " + f + " --t 1/2");
  EXPECT_FALSE(nlohmann::json::parse(strict.out)["all_pass"].get<bool>());

  std::string g = temp_path("grid.txt");
  ASSERT_EQ(drg("construct grid 4 -o " + g).code, 0);
  auto iso = nlohmann::json::parse(drg("--json iso " + f + " " + g).out);
  EXPECT_FALSE(iso["isomorphic"].get<bool>());
  auto self = nlohmann::json::parse(drg("--json iso " + f + " " + f).out);
  EXPECT_TRUE(self["isomorphic"].get<bool>());
  std::filesystem::remove(f);
  std::filesystem::remove(g);
}

TEST(Cli, FeasibleJson) {
  auto j = nlohmann::json::parse(drg("--json feasible '{28,12,1;1,6,28}' --quadrangle").out);
  EXPECT_EQ(j["verdict"], "infeasible");
  EXPECT_EQ(j["primary_failure"], "F7");
}

TEST(Cli, OutputIndependentOfThreadCount) {
  for (const char* args : {"--json scan diam2", "--json scan diam3", "--json verify thm-1-1", "--json verify props"}) {
    Invocation a = drg(args, "DRG_THREADS=1");
    Invocation b = drg(args, "DRG_THREADS=4");
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}
