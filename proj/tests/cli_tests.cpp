// End-to-end tests of the orc binary: flag surface, output formats, exit
// codes, and byte determinism. ORC_BIN is injected by the build.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ORC_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  const int exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {exit_code, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify family with explicit parameters passes") {
  auto res = run_cli("verify family --m 1 --n 1 --k 1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "p_1 candidate  expected=1/6 computed=1/6"));
  CHECK(contains(res.output, "p_2 candidate  expected=2/7 computed=2/7"));
  CHECK(!contains(res.output, "FAIL"));
  CHECK(contains(res.output, "checks passed"));
}

TEST_CASE("curvature of the antipodal C6 pair") {
  auto res = run_cli("curvature --gen cycle:6 --pair 0,3 --p 0");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "x,y,p,kappa"));
  CHECK(contains(res.output, "0,3,0/1,2/3"));
}

TEST_CASE("curvature table handles several idleness values and decimals") {
  auto res = run_cli("curvature --gen cycle:6 --pair 0,3 --p 0,1/4,1/2 --decimal-hint");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "x,y,p,kappa,kappa_decimal"));
  CHECK(contains(res.output, "0,3,0/1,2/3,0.666666666667"));
  CHECK(contains(res.output, "0,3,1/2,"));
}

TEST_CASE("idleness profile of the k=0 family pair") {
  auto res = run_cli("idleness --gen family:1,1,0 --pair x,y --format json");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "\"1/5\""));
  CHECK(contains(res.output, "\"1/3\""));
  CHECK(contains(res.output, "\"critical_points\""));
  CHECK(contains(res.output, "\"pieces\""));

  // The marked pair is the default selection.
  auto defaulted = run_cli("idleness --gen family:1,1,0 --format json");
  CHECK(defaulted.exit_code == 0);
  CHECK(defaulted.output == res.output);
}

TEST_CASE("idleness CSV emits one row per piece") {
  auto res = run_cli("idleness --gen family:1,1,0 --pair x,y --format csv");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "x,y,delta,piece_from,piece_to,slope,intercept"));
  CHECK(contains(res.output, "x,y,3,0/1,1/5,"));
  CHECK(contains(res.output, "x,y,3,1/3,1/1,"));
}

TEST_CASE("lly table uses labels when present") {
  auto res = run_cli("lly --gen figure3 --pair x,w");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "x,y,kappa_lly"));
  CHECK(contains(res.output, "x,w,1/1"));

  auto edges = run_cli("lly --gen figure3 --edges");
  CHECK(edges.exit_code == 0);
  CHECK(contains(edges.output, "w,y,-1/3"));
  CHECK(contains(edges.output, "y,z1,2/3"));
}

TEST_CASE("gen emits canonical graph JSON that loads back") {
  auto res = run_cli("gen cycle:4");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "\"n\""));
  CHECK(contains(res.output, "\"edges\""));

  const std::string path = "/tmp/orc_cli_gen_test.json";
  auto save = run_cli("gen family:1,1,0 --output " + path);
  CHECK(save.exit_code == 0);
  auto load = run_cli("idleness --graph " + path + " --pair x,y --format json");
  CHECK(load.exit_code == 0);
  CHECK(contains(load.output, "\"1/5\""));
  std::remove(path.c_str());
}

TEST_CASE("identical invocations produce identical bytes") {
  const std::string cmd = "verify product --seed 11";
  auto first = run_cli(cmd);
  auto second = run_cli(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  auto gen1 = run_cli("gen family:1,1,1");
  auto gen2 = run_cli("gen family:1,1,1");
  CHECK(gen1.output == gen2.output);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("curvature --gen cycle:6 --p 0").exit_code == 2);          // no pair
  CHECK(run_cli("curvature --gen cycle:6 --pair 0,3").exit_code == 2);     // no p
  CHECK(run_cli("curvature --gen nosuch:3 --pair 0,1 --p 0").exit_code == 2);
  CHECK(run_cli("curvature --gen cycle:6 --pair 0,3 --p 0.5").exit_code == 2);
  CHECK(run_cli("curvature --gen cycle:6 --pair 0,3 --p 3/2").exit_code == 2);
  CHECK(run_cli("curvature --gen cycle:6 --pair 0,0 --p 0").exit_code == 2);
  CHECK(run_cli("curvature --gen cycle:6 --graph /tmp/x.json --pair 0,1 --p 0").exit_code == 2);
  CHECK(run_cli("curvature --gen cycle:6 --pair 0,1 --p 0 --format xml").exit_code == 2);
  CHECK(run_cli("verify nosuchsuite").exit_code == 2);
  CHECK(run_cli("verify tree --m 1").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);

  auto err = run_cli("curvature --gen cycle:6 --pair 9,0 --p 0");
  CHECK(err.exit_code == 2);
  CHECK(contains(err.output, "--pair"));
}

TEST_CASE("verify suites cover figure3 and tree quickly") {
  auto fig = run_cli("verify figure3");
  CHECK(fig.exit_code == 0);
  CHECK(contains(fig.output, "Lin-Lu-Yau (w,y)  expected=-1/3 computed=-1/3"));

  auto tree = run_cli("verify tree");
  CHECK(tree.exit_code == 0);
  CHECK(!contains(tree.output, "FAIL"));
}
