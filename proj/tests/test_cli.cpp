#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

struct CmdResult {
  int code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(TRIQUAD_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

}  // namespace

TEST_CASE("solve_csv_single_prime") {
  CmdResult r = run_cli("solve -p 7 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out == "p,b,x,y,n\n7,1,3,5,3\n");
}

TEST_CASE("solve_rejects_composite") {
  CmdResult r = run_cli("solve -p 6");
  CHECK(r.code == 2);
}

TEST_CASE("solve_json_carries_cases") {
  CmdResult r = run_cli("solve -p 11 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"case_report\"") != std::string::npos);
  CHECK(r.out.find("\"middle_split\"") != std::string::npos);
  CHECK(r.out.find("\"unit_v\"") != std::string::npos);
  CHECK(r.out.find("\"31\"") != std::string::npos);  // x of the (11,...,5) row
}

TEST_CASE("scan_csv_small_window") {
  CmdResult r = run_cli("scan --pmax 100 --format csv --omit-timing");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "p,b,x,y,n\n"
        "2,1,21,11,3\n"
        "7,1,3,5,3\n"
        "11,1,31,5,5\n"
        "79,1,63,29,3\n");
}

TEST_CASE("scan_json_deterministic_with_omit_timing") {
  CmdResult a = run_cli("scan --pmax 60 --format json --omit-timing");
  CmdResult b = run_cli("scan --pmax 60 --format json --omit-timing");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"elapsed_ms\"") == std::string::npos);
  // without the flag the timing field appears
  CmdResult c = run_cli("scan --pmax 10 --format json");
  CHECK(c.out.find("\"elapsed_ms\"") != std::string::npos);
}

TEST_CASE("scan_dump_then_verify_round_trip") {
  CmdResult s = run_cli("scan --pmax 60 --format csv --certificates cli_dump.json");
  CHECK(s.code == 0);
  CmdResult v = run_cli("verify cli_dump.json");
  CHECK(v.code == 0);
  CHECK(v.out.find("ok:") != std::string::npos);

  // tampering with a row must break verification
  std::string dump = slurp("cli_dump.json");
  std::string tampered = dump;
  std::string::size_type at = tampered.find("\"x\": \"21\"");
  REQUIRE(at != std::string::npos);
  tampered.replace(at, 9, "\"x\": \"22\"");
  spit("cli_tampered.json", tampered);
  CmdResult bad = run_cli("verify cli_tampered.json");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("issue:") != std::string::npos);
  std::remove("cli_dump.json");
  std::remove("cli_tampered.json");
}

TEST_CASE("verify_solution_table_golden_file") {
  CmdResult r = run_cli(std::string("verify ") + TRIQUAD_DATA_DIR +
                        "/published_table.json");
  CHECK(r.code == 0);
  CHECK(r.out.find("ok:") != std::string::npos);
}

TEST_CASE("verify_missing_file_is_usage_error") {
  CmdResult r = run_cli("verify no_such_file.json");
  CHECK(r.code == 2);
}

TEST_CASE("scan_requires_pmax") {
  CmdResult r = run_cli("scan");
  CHECK(r.code == 2);
}

TEST_CASE("oracle_csv_window") {
  CmdResult r = run_cli("oracle --ymax 12 --exponents 3 --format csv");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "p,b,x,y,n\n"
        "2,1,21,11,3\n"
        "7,1,3,5,3\n");
}

TEST_CASE("oracle_markdown_default") {
  CmdResult r = run_cli("oracle --ymax 6 --exponents 3");
  CHECK(r.code == 0);
  CHECK(r.out.find("| p | b | x | y | n |") != std::string::npos);
  CHECK(r.out.find("| 7 | 1 | 3 | 5 | 3 |") != std::string::npos);
}
