#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks of the installed command surface. BCT_CLI_PATH is the
// built binary, injected by CMake.

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(BCT_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("cli_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("count and feasible") {
  CHECK(run("count -r 2,1,2 -c 2,1,2").out == "5\n");
  CHECK(run("count -r 1,4,5,2,1,3 -c 3,1,2,5,4,1").out == "89\n");
  CHECK(run("feasible -r 1,1 -c 1,1").out == "feasible\n");
  CHECK(run("feasible -r 2 -c 1,1,1").out == "infeasible\n");
}

TEST_CASE("identical invocations produce byte-identical output") {
  const std::string a = run("enumerate -r 2,1,2 -c 2,1,2 --format json").out;
  const std::string b = run("enumerate -r 2,1,2 -c 2,1,2 --format json").out;
  CHECK(a == b);
  CHECK(!a.empty());
  const std::string v1 = run("verify --max-total 3 --kinds secondary,geometric").out;
  const std::string v2 = run("verify --max-total 3 --kinds secondary,geometric --jobs 2").out;
  CHECK(v1 == v2);
}

TEST_CASE("hasse dot export of the diamond") {
  const RunResult res = run("hasse -r 2,1,2 -c 2,1,2 --kind secondary --format dot");
  CHECK(res.exit_code == 0);
  // five nodes, four cover edges
  size_t nodes = 0, edges = 0, pos = 0;
  while ((pos = res.out.find('\n', pos)) != std::string::npos) {
    ++pos;
    if (res.out.compare(pos, 3, "  \"") == 0) {
      if (res.out.find("->", pos) < res.out.find('\n', pos))
        ++edges;
      else
        ++nodes;
    }
  }
  CHECK(nodes == 5);
  CHECK(edges == 4);
  CHECK(res.out == run("export -r 2,1,2 -c 2,1,2 --what hasse --kind secondary --format dot").out);
}

TEST_CASE("compare equal relations exits zero") {
  const RunResult res = run("compare -r 2,1,2 -c 2,1,2 --kinds bruhat,secondary,geometric");
  CHECK(res.exit_code == 0);
}

TEST_CASE("verify pair reports the counterexample and exits one") {
  const std::string m1 = write_temp("m1.txt", "100000\n101110\n111110\n000110\n000100\n000111\n");
  const std::string m2 = write_temp("m2.txt", "000100\n110110\n101111\n100100\n000010\n001110\n");
  const RunResult res =
      run("verify --pair " + m1 + " " + m2 + " --kinds bruhat,secondary");
  CHECK(res.exit_code == 1);
  CHECK(res.out.find("bruhat: A<=B true") != std::string::npos);
  CHECK(res.out.find("secondary: A<=B false") != std::string::npos);
  std::remove(m1.c_str());
  std::remove(m2.c_str());
}

TEST_CASE("verify sweep exits zero when the orders agree") {
  CHECK(run("verify --max-total 4 --kinds secondary,geometric").exit_code == 0);
}

TEST_CASE("brane subcommands") {
  CHECK(run("brane charges -d '/2/3/5\\3\\2\\'").out == "r: 2 1 2\nc: 2 1 2\n");
  CHECK(run("brane separated -r 1,1,1,1 -c 2,2").out == "/1/2/3/4\\2\\\n");
  CHECK(run("brane ties -d '/1/2\\1\\' --count").out == "2\n");
  CHECK(run("brane hw -d '/1\\2/1\\' --pos 3 --dir fwd").out == "/1\\2\\2/\n");
  const std::string tie = write_temp("tie.json", "{\"ties\": [[1,2],[2,1]]}");
  const RunResult t2b = run("brane tie2bct -d '/1/2\\1\\' --ties " + tie);
  CHECK(t2b.exit_code == 0);
  CHECK(t2b.out == "01\n10\n");
  const std::string m = write_temp("m.txt", t2b.out);
  const RunResult b2t = run("brane bct2tie -d '/1/2\\1\\' --matrix " + m);
  CHECK(b2t.exit_code == 0);
  CHECK(b2t.out.find("\"ties\"") != std::string::npos);
  std::remove(tie.c_str());
  std::remove(m.c_str());
}

TEST_CASE("resolve fiber and maximal resolutions") {
  const std::string m = write_temp("host.txt", "10\n01\n11\n");
  const RunResult fiber = run("resolve --matrix " + m + " --column 1 --split 1,1");
  CHECK(fiber.exit_code == 0);
  CHECK(fiber.out == "100\n001\n011\n\n010\n001\n101\n\n");
  const RunResult maximal = run("resolve --matrix " + m + " --maximal");
  CHECK(maximal.exit_code == 0);
  CHECK(maximal.out.find("1000\n0010\n0101\n") != std::string::npos);
  std::remove(m.c_str());
}

TEST_CASE("empty family exports an empty graph with exit zero") {
  const RunResult res = run("export -r 2 -c 1,1,1 --what hasse --kind secondary --format dot");
  CHECK(res.exit_code == 0);
  CHECK(res.out == "digraph hasse {\n}\n");
}

TEST_CASE("invalid input exits two") {
  CHECK(run("count -r 2,x -c 1,1").exit_code == 2);
  CHECK(run("brane charges -d '/2//'").exit_code == 2);
  CHECK(run("order -r 2,1,2 -c 2,1,2 --kind nonsense").exit_code == 2);
  CHECK(run("resolve --matrix does_not_exist.txt --maximal").exit_code == 2);
}
