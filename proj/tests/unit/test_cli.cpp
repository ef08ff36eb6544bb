#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string command = std::string(GCG_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

const char* kOnes = "--p1 1,1,1 --p2 1,1,1,1";

}  // namespace

TEST(Cli, Pairs) {
  const CliRun r = run(std::string(kOnes) + " pairs 5 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out), 547u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "s1=0,0,0,0,0 s2=0,0 m1=0 m2=0");
  const CliRun threaded = run(std::string(kOnes) + " --threads 3 pairs 5 2");
  EXPECT_EQ(threaded.out, r.out);
  const CliRun json = run(std::string(kOnes) + " --format json pairs 1 1");
  EXPECT_EQ(json.out,
            "{\"s1\":[0],\"s2\":[0],\"m1\":0,\"m2\":0}\n{\"s1\":[1],\"s2\":[0],\"m1\":1,\"m2\":0}\n"
            "{\"s1\":[2],\"s2\":[0],\"m1\":2,\"m2\":0}\n{\"s1\":[0],\"s2\":[1],\"m1\":0,\"m2\":1}\n"
            "{\"s1\":[0],\"s2\":[2],\"m1\":0,\"m2\":2}\n{\"s1\":[0],\"s2\":[3],\"m1\":0,\"m2\":3}\n");
}

TEST(Cli, VarAndGreedyAgree) {
  const CliRun var = run(std::string(kOnes) + " --format json var 5");
  ASSERT_EQ(var.status, 0);
  const CliRun rec = run(std::string(kOnes) + " --format json greedy 5 2 --method recursive");
  ASSERT_EQ(rec.status, 0);
  EXPECT_EQ(rec.out, var.out.substr(0, var.out.size() - 2) + ",\"point\":[5,2],\"method\":\"recursive\"}\n");
  EXPECT_EQ(run(std::string(kOnes) + " var 5").out, run(std::string(kOnes) + " greedy 5 2").out);
}

TEST(Cli, SymbolicGreedy) {
  const CliRun r = run("--d1 2 --d2 3 greedy 1 1 --method combinatorial");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x1^-1 x2^-1: 1\nx1^-1: rho1\nx1^-1 x2: 1\nx2^-1: vrho1\nx1 x2^-1: vrho1\nx1^2 x2^-1: 1\n");
}

TEST(Cli, Expand) {
  const std::string path = ::testing::TempDir() + "gcg_expand.json";
  {
    std::ofstream f(path);
    f << R"({"terms":[{"e":[1,0],"c":[{"n":"1"}]},{"e":[0,1],"c":[{"n":"2"}]}]})";
  }
  const CliRun r = run(std::string(kOnes) + " expand " + path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x[-1,0]: 1\nx[0,-1]: 2\n");
}

TEST(Cli, Positivity) {
  const CliRun r = run(std::string(kOnes) + " --clusters 0..2 positivity 1 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "cluster 0: positive\ncluster 1: positive\ncluster 2: positive\n");
}

TEST(Cli, Verify) {
  const CliRun r = run("verify dyckpath");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out), 3u);
  EXPECT_EQ(r.out.rfind("PASS dyckpath.", 0), 0u);
  EXPECT_EQ(run("verify dyckpath").out, r.out);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("var 3").status, 2);
  EXPECT_EQ(run("--p1 1,2 --p2 1,1 var 3").status, 2);
  EXPECT_EQ(run("--p1 1,x --p2 1,1 var 3").status, 2);
  EXPECT_EQ(run("--d1 2 var 3").status, 2);
  EXPECT_EQ(run("verify nope").status, 2);
  EXPECT_EQ(run(std::string(kOnes) + " --format yaml var 3").status, 2);
  EXPECT_EQ(run(std::string(kOnes) + " expand /nonexistent/file.json").status, 2);
  EXPECT_EQ(run(std::string(kOnes) + " --clusters 3..5 positivity 1 1").status, 2);
}
