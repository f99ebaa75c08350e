#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

#include <gtest/gtest.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

auto run(const std::string& args) -> Run {
  std::string cmd = std::string(CHROMATIC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

auto data(const std::string& name) -> std::string { return std::string(CHROMATIC_TEST_DATA) + "/" + name; }

auto scratch(const std::string& name, const std::string& text) -> std::string {
  auto dir = std::filesystem::temp_directory_path() / "chromatic_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

auto has_line(const std::string& out, const std::string& line) -> bool {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(Cli, SolveExamples) {
  auto fall = run("solve --problem fall --in " + data("k33.gr") + " --k 3");
  EXPECT_EQ(fall.code, 0);
  EXPECT_TRUE(has_line(fall.out, "NO")) << fall.out;
  auto h2 = run("solve --problem h2col --in " + data("fano.h3"));
  EXPECT_TRUE(has_line(h2.out, "NO")) << h2.out;
  auto chs = run("solve --problem chs --in " + data("fam.chs"));
  EXPECT_TRUE(has_line(chs.out, "YES")) << chs.out;
  EXPECT_TRUE(has_line(chs.out, "S 1")) << chs.out;
  auto c6 = run("solve --problem fall --in " + data("c6.gr") + " --k 3");
  EXPECT_TRUE(has_line(c6.out, "YES")) << c6.out;
}

TEST(Cli, ReduceExamples) {
  auto out = scratch("reduced", "");
  auto t7 = run("reduce --rule thm7 --in " + data("one_edge.h3") + " --out " + out);
  EXPECT_EQ(t7.code, 0);
  EXPECT_TRUE(has_line(t7.out, "vertices 22")) << t7.out;
  auto back = run("solve --problem retract --in " + out + ".gr --c6 " + out + ".c6");
  EXPECT_EQ(back.code, 0);
  EXPECT_TRUE(has_line(back.out, "YES")) << back.out;
  auto t13 = run("reduce --rule thm13 --in " + data("one_edge.h3") + " --out " + out);
  EXPECT_TRUE(has_line(t13.out, "vertices 9")) << t13.out;
  EXPECT_TRUE(has_line(t13.out, "diameter 3")) << t13.out;
  auto p12 = run("reduce --rule prop12 --in " + data("c6.gr") + " --out " + out);
  EXPECT_TRUE(has_line(p12.out, "queries 1")) << p12.out;
  EXPECT_TRUE(std::filesystem::exists(out + ".q1.pc"));
}

TEST(Cli, ValidateCertificates) {
  auto good = scratch("c6.col", "m 1 1\nm 2 2\nm 3 3\nm 4 1\nm 5 2\nm 6 3\n");
  auto bad = scratch("c6bad.col", "m 1 1\nm 2 2\nm 3 1\nm 4 2\nm 5 1\nm 6 3\n");
  auto ok = run("validate --problem fall --in " + data("c6.gr") + " --k 3 --cert " + good);
  EXPECT_EQ(ok.code, 0);
  EXPECT_TRUE(has_line(ok.out, "ok"));
  auto no = run("validate --problem fall --in " + data("c6.gr") + " --k 3 --cert " + bad);
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("violation: b-vertex"), std::string::npos) << no.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("solve --problem fall --in " + data("missing.gr") + " --k 3").code, 10);
  EXPECT_EQ(run("solve --problem fall --in " + data("fano.h3") + " --k 3").code, 10);
  EXPECT_EQ(run("solve --problem nonsense --in " + data("c6.gr")).code, 10);
  auto uncovered = scratch("uncovered.h3", "p h3 4 1\nh 1 2 3\n");
  EXPECT_EQ(run("reduce --rule thm13 --in " + uncovered + " --out " + scratch("u", "")).code, 11);
  auto p6 = scratch("p6.gr", "p edge 6 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n");
  EXPECT_EQ(run("reduce --rule prop12 --in " + p6 + " --out " + scratch("p", "")).code, 10);
}

TEST(Cli, VerifyExitCodes) {
  auto pass = run("verify --suite prop1");
  EXPECT_EQ(pass.code, 0);
  EXPECT_NE(pass.out.find("suite prop1 pass 100 0"), std::string::npos) << pass.out;
  auto caught = run("verify --suite prop1 --mutation drop-x-y0");
  EXPECT_EQ(caught.code, 1);
  EXPECT_NE(caught.out.find("suite prop1 fail"), std::string::npos) << caught.out;
  auto listed = run("verify --list-mutations");
  EXPECT_EQ(listed.code, 0);
  EXPECT_NE(listed.out.find("fmps flaw drop-u-y"), std::string::npos);
}

TEST(Cli, GenerateIsSeeded) {
  auto a = run("generate --kind bipartite --n 8 --diameter 3 --seed 4");
  auto b = run("generate --kind bipartite --n 8 --diameter 3 --seed 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("p edge 8 ", 0), 0u) << a.out;
}
