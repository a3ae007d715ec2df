#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <sstream>

#include "prufer/cli.hpp"

namespace prufer {
namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PRUFER_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

TEST(Cli, ValidateFixture) {
  const CliResult r = run({"validate", data("t1.tree")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "n=14 k=8 leaves={2,3,5,6,9,10,11,12,13} OK\nsum(|e|-1) = 13 = n-1\nsum(deg(v)-1) = 7 = k-1\n");
}

TEST(Cli, ValidateTriangle) {
  const CliResult r = run({"validate", data("triangle.tree")});
  EXPECT_EQ(r.status, kExitDomainError);
  EXPECT_NE(r.err.find("NotATree"), std::string::npos);
}

TEST(Cli, ValidateRootOnly) {
  const CliResult r = run({"validate", data("root_only.tree")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n=1 k=0 leaves={} OK");
}

TEST(Cli, EncodeFixture) {
  const CliResult classic = run({"encode", "--codec", "classic", data("t1.tree")});
  EXPECT_EQ(classic.status, kExitOk);
  EXPECT_EQ(classic.out, slurp(data("t1_classic.code")));
  EXPECT_NE(classic.out.find("\nword 1 8 4 14 4 7 8\n"), std::string::npos);
  const CliResult star = run({"encode", "--codec", "star", data("t1.tree")});
  EXPECT_EQ(star.out, slurp(data("t1_star.code")));
  EXPECT_NE(star.out.find("\nword 1 8 4 8 4 14 7\n"), std::string::npos);
}

TEST(Cli, EncodeTrivialHasEmptyWord) {
  for (const char* codec : {"classic", "star"}) {
    const CliResult r = run({"encode", "--codec", codec, data("trivial5.tree")});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("\nword\n"), std::string::npos);
    EXPECT_EQ(run({"decode", "-"}, r.out).out, "root 5\n1 2 3 4 5  # {1,2,3,4}_5\n");
  }
}

TEST(Cli, DecodeFixture) {
  for (const char* file : {"t1_classic.code", "t1_star.code"}) {
    const CliResult r = run({"decode", data(file)});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_EQ(r.out, slurp(data("t1_canonical.tree")));
  }
}

TEST(Cli, StdinAndDeterminism) {
  const std::string tree = slurp(data("t1.tree"));
  const CliResult a = run({"encode", "--codec", "star", "-"}, tree);
  const CliResult b = run({"encode", "--codec", "star", "-"}, tree);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, slurp(data("t1_star.code")));
}

TEST(Cli, FixtureTiming) {
  using clock = std::chrono::steady_clock;
  const std::string tree = slurp(data("t1.tree"));
  for (const char* codec : {"classic", "star"}) {
    const auto start = clock::now();
    const CliResult r = run({"encode", "--codec", codec, "-"}, tree);
    const CliResult d = run({"decode", "-"}, r.out);
    const auto elapsed = clock::now() - start;
    EXPECT_EQ(d.status, kExitOk);
    const double ms = std::chrono::duration<double, std::milli>(elapsed).count();
    EXPECT_LT(ms, 2.0) << codec;
  }
}

TEST(Cli, EnumerateAndCount) {
  EXPECT_EQ(run({"enumerate", "--n", "4", "--count-only"}).out, "29\n");
  EXPECT_EQ(run({"enumerate", "--n", "5", "--count-only"}).out, "311\n");
  const CliResult one = run({"enumerate", "--n", "3", "--k", "1"});
  EXPECT_EQ(one.out, "# tree 1\nroot 3\n1 2 3  # {1,2}_3\n");
  EXPECT_EQ(run({"count", "--n", "4", "--k", "2"}).out, "12\n");
  EXPECT_EQ(run({"count", "--n", "6"}).out, "4447\n");
  EXPECT_EQ(run({"count", "--n", "14", "--k", "8"}).out, "200244757160448\n");
  EXPECT_EQ(run({"enumerate", "--n", "7", "--count-only"}).status, kExitDomainError);
  EXPECT_EQ(run({"count", "--n", "4", "--k", "4"}).status, kExitDomainError);
}

TEST(Cli, EnumerateStreamParsesBack) {
  const CliResult r = run({"enumerate", "--n", "4"});
  std::size_t trees = 0;
  std::istringstream lines(r.out);
  std::string line, current;
  auto flush = [&] {
    if (current.empty()) return;
    EXPECT_EQ(run({"validate", "-"}, current).status, kExitOk);
    ++trees;
    current.clear();
  };
  while (std::getline(lines, line)) {
    if (line.rfind("# tree ", 0) == 0) flush();
    current += line + "\n";
  }
  flush();
  EXPECT_EQ(trees, 29u);
}

TEST(Cli, Perm) {
  EXPECT_EQ(run({"perm", "--sigma", "1"}).out, "1\n");
  EXPECT_EQ(run({"perm", "--sigma", "2 1"}).out, "2 1\n");
  const CliResult bad = run({"perm", "--sigma", "1 1"});
  EXPECT_EQ(bad.status, kExitDomainError);
  EXPECT_NE(bad.err.find("NotAPermutation"), std::string::npos);
  EXPECT_EQ(run({"perm", "--sigma", "1 x"}).status, kExitUsageError);
}

TEST(Cli, Orbits) {
  const CliResult r = run({"orbits", "--n", "4"});
  EXPECT_EQ(r.status, kExitOk);
  for (const char* line : {"{2341,3241,4231,4321}\n", "{2431,3421}\n", "{1342,1432,3142,3412,4132,4312}\n",
                           "{1243,1423,2143,2413,4123,4213}\n"}) {
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  }
  EXPECT_EQ(run({"orbits", "--n", "3"}).out, "{123}\n{132,312}\n{213}\n{231,321}\n");
  EXPECT_NE(run({"orbits", "--n", "3", "--cycles"}).out.find("(132 312)\n"), std::string::npos);
  EXPECT_EQ(run({"orbits", "--n", "9"}).status, kExitDomainError);
}

TEST(Cli, Dot) {
  const CliResult r = run({"dot", data("t1.tree")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out.rfind("graph hypertree {", 0), 0u);
  const CliResult steps = run({"dot", "--steps", data("t1.tree")});
  std::size_t graphs = 0;
  for (std::size_t pos = 0; (pos = steps.out.find("graph stage", pos)) != std::string::npos; ++pos) ++graphs;
  EXPECT_EQ(graphs, 6u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, kExitUsageError);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsageError);
  EXPECT_EQ(run({"encode", "--codec", "zip", data("t1.tree")}).status, kExitUsageError);
  EXPECT_EQ(run({"validate", "/nonexistent/file"}).status, kExitUsageError);
  EXPECT_EQ(run({"validate", "-"}, "root x\n").status, kExitUsageError);
  EXPECT_EQ(run({"decode", "-"}, "root 3\nvariant star\npartition 1;2\nword 9\n").status, kExitDomainError);
  EXPECT_EQ(run({"--help"}).status, kExitOk);
}

}  // namespace
}  // namespace prufer
