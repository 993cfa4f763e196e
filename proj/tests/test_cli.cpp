#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / "symrank_cli_test";
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

// Runs the CLI with the given argument string; stdin fed from a file when
// provided. Captures stdout+stderr.
CmdResult run_cli(const std::string& args, const std::string& stdin_data = "",
                  bool feed_stdin = false) {
  const auto out_path = scratch_dir() / "out.txt";
  const auto in_path = scratch_dir() / "in.txt";
  std::string cmd = std::string(SYMRANK_CLI_PATH) + " " + args;
  if (feed_stdin) {
    std::ofstream f(in_path, std::ios::binary);
    f << stdin_data;
    cmd += " < " + in_path.string();
  }
  cmd += " > " + out_path.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  CmdResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = read_file(out_path);
  return result;
}

}  // namespace

TEST_CASE("sigma prints the canonical polynomial") {
  const CmdResult r = run_cli("sigma 1 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "x1 + x2 + x3\n");
}

TEST_CASE("decompose | verify round-trips with exit 0 across the grid") {
  for (const auto& [d, n] : std::vector<std::pair<int, int>>{
           {1, 4}, {3, 5}, {5, 7}, {2, 4}, {4, 6}}) {
    const CmdResult dec = run_cli("decompose " + std::to_string(d) + " " +
                                  std::to_string(n) + " --format json");
    REQUIRE(dec.exit_code == 0);
    const CmdResult ver = run_cli("verify -", dec.out, true);
    CHECK(ver.exit_code == 0);
    CHECK(ver.out.find("verified") != std::string::npos);
  }
}

TEST_CASE("verify catches a tampered weight with exit 1 and a residual") {
  CmdResult dec = run_cli("decompose 3 5 --format json");
  REQUIRE(dec.exit_code == 0);
  // flip the sign of the second summand's weight ("-1" -> "1")
  const auto pos = dec.out.find("\"weight\": \"-1\"");
  REQUIRE(pos != std::string::npos);
  dec.out.erase(pos + 11, 1);
  const CmdResult ver = run_cli("verify -", dec.out, true);
  CHECK(ver.exit_code == 1);
  CHECK(ver.out.find("FAILED") != std::string::npos);
  CHECK(ver.out.find("residual") != std::string::npos);
}

TEST_CASE("verify of malformed input exits 2") {
  const CmdResult garbage = run_cli("verify -", "not json", true);
  CHECK(garbage.exit_code == 2);
  const CmdResult missing = run_cli("verify /nonexistent/file.json");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("decompose --monomial requires d = n") {
  const CmdResult ok = run_cli("decompose 4 4 --monomial --format json");
  CHECK(ok.exit_code == 0);
  const CmdResult bad = run_cli("decompose 3 4 --monomial");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate 1 2").exit_code == 2);
  CHECK(run_cli("sigma 3").exit_code == 2);
  CHECK(run_cli("sigma 9 5").exit_code == 2);       // d > n
  CHECK(run_cli("decompose 2 2").exit_code == 2);   // even needs n > d
  CHECK(run_cli("sigma 3 5 --format csv").exit_code == 2);
}

TEST_CASE("bounds emits the schema fields") {
  const CmdResult r = run_cli("bounds 3 5 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"exact\": \"6\"") != std::string::npos);
  CHECK(r.out.find("\"real_rank_equal\": true") != std::string::npos);
  const CmdResult even = run_cli("bounds 4 5 --format json");
  CHECK(even.out.find("\"lower\": \"10\"") != std::string::npos);
  CHECK(even.out.find("\"upper\": \"16\"") != std::string::npos);
  CHECK(even.out.find("\"exact\": null") != std::string::npos);
}

TEST_CASE("identity exit code tracks equality") {
  const CmdResult r = run_cli("identity 2 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("equal") != std::string::npos);
}

TEST_CASE("catalecticant formats") {
  const CmdResult text = run_cli("catalecticant 4 5 2");
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("11*") != std::string::npos);
  CHECK(text.out.find("rank: 10") != std::string::npos);

  const CmdResult bitmap = run_cli("catalecticant 4 5 2 --refine --format bitmap");
  CHECK(bitmap.exit_code == 0);
  CHECK(bitmap.out == "0000000111\n0000011001\n0000101010\n0000110100\n"
                      "0011000001\n0101000010\n0110000100\n1001001000\n"
                      "1010010000\n1100100000\n");

  const CmdResult csv = run_cli("catalecticant 2 3 1 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find(",x1,x2,x3\n") == 0);

  const CmdResult json = run_cli("catalecticant 2 3 1 --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"rank\": 3") != std::string::npos);
}

TEST_CASE("witness summary matches the proposition") {
  const CmdResult r = run_cli("witness 4 5 15");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("0 of 16 subsets of size 15 admit membership") == 0);
  const CmdResult full = run_cli("witness 4 5 16 --format json");
  CHECK(full.exit_code == 0);
  CHECK(full.out.find("\"members\": [") != std::string::npos);
  CHECK(full.out.find("\"elapsed_ms\": 0") != std::string::npos);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const std::string& args :
       {std::string("decompose 5 7 --format json"), std::string("bounds 4 5 --format json"),
        std::string("witness 4 5 15 --format json --certificates"),
        std::string("catalecticant 4 5 2 --format csv"),
        std::string("hilbert 4 5 --check --format json")}) {
    const CmdResult a = run_cli(args);
    const CmdResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("thread count env var leaves results unchanged") {
  const CmdResult seq = run_cli("witness 4 5 15 --format json");
  const auto env_backup = []() -> std::string {
    const char* v = std::getenv("SYMRANK_THREADS");
    return v ? v : "";
  }();
  setenv("SYMRANK_THREADS", "4", 1);
  const CmdResult par = run_cli("witness 4 5 15 --format json");
  if (env_backup.empty())
    unsetenv("SYMRANK_THREADS");
  else
    setenv("SYMRANK_THREADS", env_backup.c_str(), 1);
  CHECK(seq.exit_code == par.exit_code);
  CHECK(seq.out == par.out);
}

TEST_CASE("output file option") {
  const auto path = scratch_dir() / "sigma.txt";
  std::filesystem::remove(path);
  const CmdResult r = run_cli("sigma 2 3 -o " + path.string());
  CHECK(r.exit_code == 0);
  CHECK(read_file(path) == "x1*x2 + x1*x3 + x2*x3\n");
}
