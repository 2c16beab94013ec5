// Exercises the command-line tool end to end. argv[1] is the path to the
// built binary, argv[2] the source directory (for JSON sample inputs).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "boalch/families.hpp"

namespace {

std::string g_cli;
std::string g_srcdir;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string tmp = "cli_out.tmp";
  std::string cmd = g_cli + " " + args + " > " + tmp + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
#ifdef _WIN32
  r.code = status;
#else
  r.code = WEXITSTATUS(status);
#endif
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(tmp.c_str());
  return r;
}

}  // namespace

TEST_CASE("validate-quiver accepts the builtins") {
  CHECK(run("validate-quiver --quiver builtin:interval").code == 0);
  CHECK(run("validate-quiver --quiver builtin:triangle").code == 0);
}

TEST_CASE("missing input files exit with the input-error code") {
  CHECK(run("validate-quiver --quiver no_such_file.json").code == 3);
  CHECK(run("check-conditions --family no_such_family.json").code == 3);
}

TEST_CASE("build-boalch --dump round-trips through validate-quiver") {
  RunResult dump = run("build-boalch --quiver builtin:triangle --dump");
  REQUIRE(dump.code == 0);
  std::ofstream("dumped_quiver.json") << dump.out;
  CHECK(run("validate-quiver --quiver dumped_quiver.json").code == 0);
  std::remove("dumped_quiver.json");
}

TEST_CASE("build-boalch lists derived generators and relations") {
  RunResult r = run("build-boalch --quiver builtin:interval");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("g2") != std::string::npos);
  CHECK(r.out.find("w12") != std::string::npos);
  CHECK(r.out.find("relations:") != std::string::npos);
}

TEST_CASE("bracket renders a tensor in the mini-language") {
  RunResult r = run("bracket --quiver builtin:interval --table builtin:interval v12 v21");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("(x)") != std::string::npos);
}

TEST_CASE("malformed expression input exits with the input-error code") {
  CHECK(run("bracket --quiver builtin:interval --table builtin:interval v13 v21").code == 3);
  CHECK(run("bracket --quiver builtin:interval --table builtin:interval 'v12 +' v21").code ==
        3);
}

TEST_CASE("check-qp on the builtins is all-equal") {
  CHECK(run("check-qp --quiver builtin:interval --table builtin:interval").code == 0);
}

TEST_CASE("check-moment on the builtins is all-equal") {
  CHECK(run("check-moment --quiver builtin:interval --table builtin:interval").code == 0);
}

TEST_CASE("symbolic-only moment check reports undecided via exit code 2") {
  RunResult r = run(
      "check-moment --quiver builtin:interval --table builtin:interval "
      "--strategy structural,expanded");
  CHECK(r.code == 2);
  CHECK(r.out.find("UNDECIDED") != std::string::npos);
}

TEST_CASE("check-conditions on the builtin family") {
  RunResult r = run("check-conditions --family builtin:table1");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 violated") != std::string::npos);
}

TEST_CASE("check-conditions rejects an inadmissible family") {
  // perturb one structurally-legal entry of the builtin family
  boalch::CoefficientFamily cf = boalch::table1_family();
  cf.set_nu(3, 1, 2, boalch::half());
  std::ofstream("bad_family.json") << cf.to_json();
  RunResult r = run("check-conditions --family bad_family.json");
  std::remove("bad_family.json");
  CHECK(r.code == 1);
  CHECK(r.out.find("VIOLATED") != std::string::npos);
}

TEST_CASE("malformed family input exits with the input-error code") {
  std::ofstream("broken_family.json") << "this is not json";
  RunResult r = run("check-conditions --family broken_family.json");
  std::remove("broken_family.json");
  CHECK(r.code == 3);
}

TEST_CASE("verify-fixtures passes on both builtins") {
  CHECK(run("verify-fixtures --quiver builtin:interval").code == 0);
}

TEST_CASE("rep-verify reports dimension counts") {
  RunResult r = run("rep-verify --quiver builtin:triangle --dims 1,1,1 --seed 1");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("6") != std::string::npos);
}

TEST_CASE("search with a zero grid returns the zero family") {
  RunResult r = run(
      "search --n 2 --limit 5 --grid-alpha 0 --grid-beta 0 --grid-mu 0 "
      "--grid-nu 0 --grid-kappa 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("1") != std::string::npos);  // one family found
}

TEST_CASE("json format emits parseable-looking output") {
  RunResult r = run("check-qp --quiver builtin:interval --table builtin:interval --format json");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"verdict\"") != std::string::npos);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-cli> [source-dir]\n");
    return 1;
  }
  g_cli = argv[1];
  if (argc > 2) g_srcdir = argv[2];
  doctest::Context ctx;
  ctx.applyCommandLine(1, argv);
  return ctx.run();
}
