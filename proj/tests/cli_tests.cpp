#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// End-to-end runs of the built CLI binary. The harness passes the binary
// path in SEMILAT_BIN and the fixture directory in SEMILAT_FIXTURES.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr combined
};

std::string bin_path() {
  const char* bin = std::getenv("SEMILAT_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "SEMILAT_BIN must point at the CLI binary");
  return bin;
}

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("SEMILAT_FIXTURES");
  REQUIRE_MESSAGE(dir != nullptr, "SEMILAT_FIXTURES must point at the fixtures");
  return std::string(dir) + "/" + name;
}

RunResult run(const std::string& args) {
  std::string cmd = bin_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, output};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("transform --all emits the dense table in mask order") {
  RunResult r = run("transform " + fixture("four_point.problem") + " --all");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "\t1\n1\t3\n2\t4\n1,2\t10\n");
}

TEST_CASE("transform with explicit queries") {
  RunResult r = run("transform " + fixture("four_point.problem") + " 1,2 1 \"\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1,2\t10\n1\t3\n\t1\n");
}

TEST_CASE("transform on the single-member family is constant") {
  RunResult r = run("transform " + fixture("empty_family.problem") + " --all");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "\t1\n1\t1\n2\t1\n1,2\t1\n");

  // Inverting the constant table recovers the unit mass at the empty set.
  auto table = temp_file("semilat_cli_ones.table");
  RunResult t = run("transform " + fixture("empty_family.problem") + " --all > " +
                    table.string());
  REQUIRE(t.exit_code == 0);
  RunResult inv = run("invert " + table.string() + " \"\" 1");
  CHECK(inv.exit_code == 0);
  CHECK(inv.output == "\t1\n1\t0\n");
  std::filesystem::remove(table);
}

TEST_CASE("transform --all refuses grounds beyond the dense limit") {
  auto wide = temp_file("semilat_cli_wide.problem");
  {
    std::ofstream out(wide);
    out << "ground ";
    for (int i = 0; i < 25; ++i) out << (i ? "," : "") << "e" << i;
    out << "\nmember\nweight = 1\n";
  }
  RunResult r = run("transform " + wide.string() + " --all");
  CHECK(r.exit_code == 2);
  // Sparse queries on the same ground still work.
  RunResult q = run("transform " + wide.string() + " e3,e7");
  CHECK(q.exit_code == 0);
  CHECK(q.output == "e3,e7\t1\n");
  std::filesystem::remove(wide);
}

TEST_CASE("malformed subset key names the key and exits 2") {
  RunResult r = run("transform " + fixture("four_point.problem") + " 1,zap");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("zap") != std::string::npos);
}

TEST_CASE("unclosed families need --close") {
  RunResult bare = run("transform " + fixture("not_closed.problem") + " --all");
  CHECK(bare.exit_code == 2);
  CHECK(bare.output.find("--close") != std::string::npos);

  RunResult closed = run("transform " + fixture("not_closed.problem") + " --all --close");
  CHECK(closed.exit_code == 0);
  // Closure adds {1,2} with weight 0: f(1,2) = 1+2+3+0.
  CHECK(closed.output == "\t1\n1\t3\n2\t4\n1,2\t6\n");
}

TEST_CASE("transform piped to invert reproduces the weights byte-exactly") {
  auto table = temp_file("semilat_cli_roundtrip.table");
  RunResult t = run("transform " + fixture("four_point.problem") + " --all > " +
                    table.string());
  REQUIRE(t.exit_code == 0);

  RunResult inv = run("invert " + table.string() + " \"\" 1 2 1,2");
  CHECK(inv.exit_code == 0);
  CHECK(inv.output == "\t1\n1\t2\n2\t3\n1,2\t4\n");
  std::filesystem::remove(table);
}

TEST_CASE("invert single queries and family mode") {
  auto table = temp_file("semilat_cli_invert.table");
  RunResult t = run("transform " + fixture("four_point.problem") + " --all > " +
                    table.string());
  REQUIRE(t.exit_code == 0);

  RunResult point = run("invert " + table.string() + " 1,2");
  CHECK(point.exit_code == 0);
  CHECK(point.output == "1,2\t4\n");

  RunResult family = run("invert " + table.string() + " --family 1 2");
  CHECK(family.exit_code == 0);
  CHECK(family.output == "5\n");
  std::filesystem::remove(table);
}

TEST_CASE("invert reports incomplete tables") {
  auto table = temp_file("semilat_cli_partial.table");
  std::ofstream(table) << "1\t3\n1,2\t10\n";
  RunResult r = run("invert " + table.string() + " 1,2");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("no row") != std::string::npos);
  std::filesystem::remove(table);
}

TEST_CASE("base-measure matches itself and totals the mass") {
  RunResult r = run("base-measure " + fixture("four_point.problem"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("inversion: 10") != std::string::npos);
  CHECK(r.output.find("verdict: MATCH") != std::string::npos);

  // Exclude {1}, require a hit of {2}: only the member {2}, weight 3.
  RunResult one = run("base-measure " + fixture("four_point.problem") +
                      " --f 1 --u 2");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("inversion: 3") != std::string::npos);
  CHECK(one.output.find("verdict: MATCH") != std::string::npos);
}

TEST_CASE("base-measure flags corrupted tables as MISMATCH") {
  RunResult r = run("base-measure " + fixture("four_point.problem") + " --table " +
                    fixture("corrupt_table.table"));
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("verdict: MISMATCH") != std::string::npos);
}

TEST_CASE("base-measure rejects empty required sets") {
  RunResult r = run("base-measure " + fixture("four_point.problem") + " --u \"\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("bench emits machine-readable lines and checks itself") {
  RunResult r = run("bench 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("zeta_fast,8,") != std::string::npos);
  CHECK(r.output.find("mobius_fast,8,") != std::string::npos);
  CHECK(r.output.find("oracle_zeta,8,") != std::string::npos);
  CHECK(r.output.find("oracle_mobius,8,") != std::string::npos);

  RunResult skip = run("bench 18 --reps 1");
  CHECK(skip.exit_code == 0);
  CHECK(skip.output.find("oracle_zeta") == std::string::npos);

  RunResult range = run("bench 30");
  CHECK(range.exit_code == 2);
}

TEST_CASE("demo-ie narrates the three routes and matches") {
  RunResult r = run("demo-ie 1,2,3,4 1,2 2,3 3,4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("= 4\n") != std::string::npos);
  CHECK(r.output.find("direct count: 4") != std::string::npos);
  CHECK(r.output.find("verdict: MATCH") != std::string::npos);

  RunResult same = run("demo-ie a,b,c a,b a,b a,b");
  CHECK(same.exit_code == 0);
  CHECK(same.output.find("direct count: 2") != std::string::npos);
}
