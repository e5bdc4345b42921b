#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

struct Invocation {
  int status = -1;
  std::string out;
};

/// Runs the CLI through the shell; `args` may contain pipes and redirections.
Invocation run(const std::string& args, const std::string& env = "") {
  const std::string command = env + " " + std::string(ALLIANCE_LAB_BINARY) + " " + args;
  Invocation r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buffer{};
  while (std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) r.out.append(buffer.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

const std::string kBinary = ALLIANCE_LAB_BINARY;

TEST(Cli, SolveCycle) {
  const Invocation r = run("solve Dhc");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("gamma_o = 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("witness = {"), std::string::npos) << r.out;
}

TEST(Cli, SolveJsonAndAllSets) {
  const Invocation r = run("solve Cr --all-min-sets --format json");  // C4 as 0-1-3-2, sets ordered by mask
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["gamma_o"], 2);
  EXPECT_EQ(j["minimum_sets"], nlohmann::json::parse("[[1,2],[0,3]]"));
}

TEST(Cli, SolveOracleAgrees) {
  EXPECT_EQ(run("solve Dhc --oracle").out, run("solve Dhc").out);
}

TEST(Cli, SolveCsv) {
  const Invocation r = run("solve Bw --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "graph6,gamma_o,witness\nBw,2,\"{0,1}\"\n");
}

TEST(Cli, FamilyGenPipesIntoSolve) {
  const Invocation r = run("family gen --g1 4 | " + kBinary + " solve -");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("gamma_o = 2"), std::string::npos) << r.out;
}

TEST(Cli, FamilyGenOutputs) {
  const Invocation g1 = run("family gen --g1 4");
  EXPECT_EQ(g1.status, 0);
  EXPECT_NE(g1.out.find("\tG1 k=4\n"), std::string::npos) << g1.out;
  const Invocation replayed = run("family gen --replay 'G1 k=4; O1 @v0; O2 @v0'");
  EXPECT_EQ(replayed.status, 0);
  EXPECT_NE(replayed.out.find("\tG1 k=4; O1 @v0; O2 @v0"), std::string::npos);
  const Invocation f = run("family gen --stars 1,1 --center-edges 0-1");
  EXPECT_EQ(f.status, 0);
  EXPECT_NE(f.out.find("F stars=1,1 edges=0-1"), std::string::npos) << f.out;
  const Invocation g0 = run("family gen --g1 4 --g0 --stars 2 --attach-support 1");
  EXPECT_EQ(g0.status, 0);
  EXPECT_EQ(run("family gen --g1 5 2>/dev/null").status, 2);
  EXPECT_EQ(run("family gen --replay 'G1 k=4; O1 @v1' 2>/dev/null").status, 2);
}

TEST(Cli, FamilyCheck) {
  const Invocation member = run("family gen --replay 'G1 k=4; O1 @v0; O2 @v0' | " + kBinary + " family check - --trace");
  EXPECT_EQ(member.status, 0);
  EXPECT_NE(member.out.find("in G = yes"), std::string::npos) << member.out;
  EXPECT_NE(member.out.find("[G1 k=4"), std::string::npos) << member.out;
  const Invocation c4 = run("family check Cr --format json");
  EXPECT_EQ(c4.status, 0);
  EXPECT_EQ(nlohmann::json::parse(c4.out)["member"], false);
  const Invocation p5 = run("family check Dhc 2>/dev/null");  // C5 is unicyclic
  EXPECT_NE(p5.out.find("in G = no"), std::string::npos);
  EXPECT_EQ(run("family check 'C~' 2>/dev/null").status, 2);  // K4
}

TEST(Cli, Stats) {
  const Invocation r = run("stats Cr");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("class = unicyclic"), std::string::npos);
  EXPECT_NE(r.out.find("cycle_length = 4"), std::string::npos);
  EXPECT_NE(r.out.find("unicyclic_lower_bound = 4/3"), std::string::npos);
  EXPECT_NE(r.out.find("tree_lower_bound = 5/3 (not applicable)"), std::string::npos);
  const auto j = nlohmann::json::parse(run("stats Ch --format json").out);
  EXPECT_EQ(j["class"], "tree");
  EXPECT_EQ(j["l"], 2);
  EXPECT_EQ(j["bounds"]["tree_lower"]["value"], "5/3");
}

TEST(Cli, EnumerateStreams) {
  const Invocation trees = run("enumerate trees 7");
  EXPECT_EQ(trees.status, 0);
  EXPECT_EQ(std::count(trees.out.begin(), trees.out.end(), '\n'), 11);
  const Invocation uni = run("enumerate unicyclic --max-order 6 2>/dev/null");
  EXPECT_EQ(std::count(uni.out.begin(), uni.out.end(), '\n'), 1 + 2 + 5 + 13);
  const Invocation stats = run("enumerate unicyclic 7 --stats 2>&1 >/dev/null");
  const auto j = nlohmann::json::parse(stats.out);
  EXPECT_EQ(j["graph_count"], 33);
  const Invocation g = run("enumerate family-g 9");
  EXPECT_EQ(g.status, 0);
  EXPECT_NE(g.out.find("G1 k=6"), std::string::npos);
}

TEST(Cli, EnumerateIsDeterministic) {
  EXPECT_EQ(run("enumerate unicyclic 9 --jobs 1").out, run("enumerate unicyclic 9 --jobs 3").out);
}

TEST(Cli, ReadsFilesAndStdin) {
  const auto path = std::filesystem::temp_directory_path() / "alliance-lab-cli-input.g6";
  std::ofstream(path) << "Dhc trailing words\n\n  Bw\n";
  const Invocation r = run("solve " + path.string() + " --format json");
  EXPECT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string first;
  std::string second;
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(nlohmann::json::parse(first)["gamma_o"], 3);
  EXPECT_EQ(nlohmann::json::parse(second)["gamma_o"], 2);
  EXPECT_EQ(run("solve - < " + path.string()).out, run("solve " + path.string()).out);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  Invocation bad = run("solve 'D h' 2>&1");
  EXPECT_EQ(bad.status, 2);
  EXPECT_NE(bad.out.find("byte 1"), std::string::npos) << bad.out;
  EXPECT_EQ(run("solve 'B?' 2>/dev/null").status, 2);  // disconnected
  EXPECT_EQ(run("frobnicate 2>/dev/null").status, 2);
  EXPECT_EQ(run("enumerate trees 15 2>/dev/null").status, 3);
  EXPECT_EQ(run("enumerate unicyclic 9 2>/dev/null", "ALLIANCE_LAB_MAX_N=8").status, 3);
  EXPECT_EQ(run("enumerate trees 15 2>/dev/null", "ALLIANCE_LAB_MAX_N=15").status, 0);
  EXPECT_EQ(run("stats Bw 2>/dev/null", "ALLIANCE_LAB_MAX_N=zero").status, 2);
  EXPECT_EQ(run("--help >/dev/null").status, 0);
}

TEST(Cli, VerifyPassesAndIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "alliance-lab-cli-verify";
  std::filesystem::remove_all(dir);
  const Invocation first = run("verify --max-unicyclic 9 --max-tree 9 --format json --out " + (dir / "a").string() +
                        " 2>/dev/null");
  EXPECT_EQ(first.status, 0);
  const auto j = nlohmann::json::parse(first.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["status"], "pass");
  const Invocation second = run("verify --max-unicyclic 9 --max-tree 9 --jobs 2 --format json --out " +
                         (dir / "b").string() + " 2>/dev/null");
  EXPECT_EQ(first.out, second.out);
  for (const char* name : {"report.json", "records.csv"}) {
    std::ifstream a(dir / "a" / name);
    std::ifstream b(dir / "b" / name);
    std::stringstream ta;
    std::stringstream tb;
    ta << a.rdbuf();
    tb << b.rdbuf();
    EXPECT_FALSE(ta.str().empty());
    EXPECT_EQ(ta.str(), tb.str()) << name;
  }
  std::filesystem::remove_all(dir);
  const Invocation text = run("verify --max-order 7 2>/dev/null");
  EXPECT_EQ(text.status, 0);
  EXPECT_NE(text.out.find("PASS tree-lower-bound"), std::string::npos) << text.out;
  EXPECT_NE(text.out.find("violations = 0"), std::string::npos);
}

}  // namespace
