#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
  std::string cmd = std::string(WORDREP_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& rel) { return std::string(WORDREP_DATA_DIR) + "/" + rel; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, DecideExitCodes) {
  auto a = run("decide " + data("graphs/A.edges"));
  EXPECT_EQ(a.status, 1);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "NonRepresentable");
  auto m = run("decide " + data("graphs/M.edges"));
  EXPECT_EQ(m.status, 0);
  EXPECT_EQ(m.out.substr(0, m.out.find('\n')), "Representable");
  EXPECT_NE(m.out.find("4 4\n1 2 >\n"), std::string::npos);
}

TEST(Cli, CheckWord) {
  auto r = run("check-word " + data("graphs/M.edges") + " --word 1213423");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "represents: true\n");
  auto no = run("check-word " + data("graphs/K4.edges") + " --word 1213423");
  EXPECT_EQ(no.status, 1);
  EXPECT_EQ(no.out, "represents: false\n");
  EXPECT_EQ(run("check-word " + data("graphs/K4.edges") + " --word 123").status, 2);
  EXPECT_EQ(run("check-word " + data("graphs/K4.edges") + " --word 12x4").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("decide").status, 2);
  EXPECT_EQ(run("decide " + data("graphs/A.edges") + " --bogus").status, 2);
  EXPECT_EQ(run("decide /nonexistent/graph.edges").status, 2);
  EXPECT_EQ(run("census 7").status, 2);
  EXPECT_EQ(run("find-word " + data("graphs/petersen.edges") + " --k-max 4").status, 2);
}

TEST(Cli, ParseErrorNamesLineAndColumn) {
  auto path = std::string(::testing::TempDir()) + "bad.edges";
  {
    std::ofstream out(path);
    out << "3 1\n1 9\n";
  }
  std::string cmd = std::string(WORDREP_CLI) + " decide " + path + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  ASSERT_TRUE(p);
  std::array<char, 512> buf{};
  std::string out;
  while (fgets(buf.data(), buf.size(), p)) out += buf.data();
  int st = pclose(p);
  EXPECT_EQ(WEXITSTATUS(st), 2);
  EXPECT_NE(out.find("line 2, column 3"), std::string::npos) << out;
}

TEST(Cli, DecideJsonGolden) {
  for (auto name : {"M", "A"}) {
    auto r = run("decide --json " + data(std::string("graphs/") + name + ".edges"));
    auto j = nlohmann::json::parse(r.out);
    ASSERT_TRUE(j["stats"].contains("wall_ms"));
    j["stats"].erase("wall_ms");
    auto golden = nlohmann::json::parse(slurp(std::string(WORDREP_GOLDEN_DIR) + "/decide_" + name + ".json"));
    EXPECT_EQ(j, golden) << j.dump(2);
  }
}

TEST(Cli, OtherCommands) {
  auto c = run("count-orientations " + data("graphs/K4.edges"));
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "count: 24");

  auto g = run("graph-of-word --word 1213423");
  EXPECT_EQ(g.out, "4 4\n1 2\n2 3\n2 4\n3 4\n");

  auto w = run("find-word " + data("graphs/M.edges") + " --k-max 2");
  EXPECT_EQ(w.status, 0);
  EXPECT_EQ(w.out, "1 2 1 3 4 2 3 4\n# k=2\n");
  EXPECT_EQ(run("find-word " + data("graphs/A.edges") + " --k-max 2").status, 1);

  auto f = run("find-orientation --json " + data("graphs/C5.edges"));
  auto j = nlohmann::json::parse(f.out);
  EXPECT_TRUE(j["found"].get<bool>());
  EXPECT_EQ(j["orientation"]["arcs"].size(), 5u);

  auto cen = run("census 6 --json");
  auto cj = nlohmann::json::parse(cen.out);
  ASSERT_EQ(cj["rows"].size(), 5u);
  EXPECT_EQ(cj["rows"][4]["b_n"], 32696);
}

TEST(Cli, VerifyPaperIsDeterministic) {
  auto a = run("verify-paper");
  EXPECT_EQ(a.status, 0);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos) << a.out;
  EXPECT_EQ(a.out.find("FAIL"), std::string::npos) << a.out;
  EXPECT_EQ(run("verify-paper").out, a.out);
  EXPECT_EQ(run("verify-paper --workers 4").out, a.out);
  EXPECT_EQ(run("--workers 2 verify-paper --data-dir " + std::string(WORDREP_DATA_DIR)).out, a.out);
}

TEST(Cli, WorkersDoNotChangeWitnesses) {
  for (auto name : {"M", "C5", "petersen", "A"}) {
    auto one = run("find-orientation " + data(std::string("graphs/") + name + ".edges") + " --workers 1");
    auto four = run("find-orientation " + data(std::string("graphs/") + name + ".edges") + " --workers 4");
    EXPECT_EQ(one.out.substr(0, one.out.find("# nodes")), four.out.substr(0, four.out.find("# nodes"))) << name;
  }
}
