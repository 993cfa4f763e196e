// Command-line front end: exact decompositions, catalecticant ranks and the
// sign-point searches, with deterministic text/JSON/CSV output.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "symrank/apolarity.hpp"
#include "symrank/decomposition.hpp"
#include "symrank/io.hpp"
#include "symrank/witness.hpp"

namespace {

using namespace symrank;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string path;  // empty = stdout

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    file << text;
  }
  void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

int thread_count_from_env() {
  const char* raw = std::getenv("SYMRANK_THREADS");
  if (!raw) return 1;
  const int v = std::atoi(raw);
  return v > 0 ? v : 1;
}

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open input file: " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

int run_sigma(int d, int n, const std::string& format, const Output& out) {
  const Polynomial p = elementary_symmetric(d, n);
  if (format == "json")
    out.write(to_json(p));
  else
    out.write(to_string(p) + "\n");
  return kExitOk;
}

int run_decompose(int d, int n, bool monomial, const std::string& format,
                  const Output& out) {
  Decomposition dec;
  if (monomial) {
    if (d != n)
      throw std::domain_error("decompose --monomial targets sigma(n,n); pass d = n");
    dec = decompose_monomial(n);
  } else if (d % 2 != 0) {
    dec = decompose_odd(d, n);
  } else {
    dec = decompose_even(d, n);
  }
  if (format == "json")
    out.write(to_json(dec));
  else
    out.write(to_text(dec));
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& format, const Output& out) {
  Json j;
  try {
    j = Json::parse(read_input(path));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  const Decomposition dec = decomposition_from_json(j);
  const VerificationReport report = verify(dec);
  if (format == "json")
    out.write(to_json(report));
  else
    out.write(to_text(report));
  return report.passed ? kExitOk : kExitCheckFailed;
}

int run_catalecticant(int d, int n, int r, bool refine, const std::string& format,
                      const Output& out) {
  ExactMatrix m = catalecticant(elementary_symmetric(d, n), r);
  if (refine) m = squarefree_refine(m);
  if (format == "csv") {
    out.write(matrix_to_csv(m));
  } else if (format == "bitmap") {
    out.write(matrix_to_bitmap(m));
  } else if (format == "json") {
    out.write(matrix_to_json(m, exact_rank(m)));
  } else {
    out.write(matrix_pretty(m) + "rank: " + std::to_string(exact_rank(m)) + "\n");
  }
  return kExitOk;
}

int run_hilbert(int d, int n, bool check, const std::string& format, const Output& out) {
  if (format == "json") {
    Json j;
    j["d"] = d;
    j["n"] = n;
    j["values"] = Json::array();
    for (int r = 0; r <= d; ++r) {
      Json jr;
      jr["r"] = r;
      jr["value"] = to_decimal(hilbert_function(d, n, r));
      if (check) jr["catalecticant_rank"] = to_decimal(hilbert_function_via_rank(d, n, r));
      j["values"].push_back(std::move(jr));
    }
    out.write(j);
  } else {
    std::ostringstream text;
    text << "r hilb(" << d << "," << n << ")" << (check ? " rank" : "") << "\n";
    for (int r = 0; r <= d; ++r) {
      text << r << " " << to_decimal(hilbert_function(d, n, r));
      if (check) text << " " << to_decimal(hilbert_function_via_rank(d, n, r));
      text << "\n";
    }
    out.write(text.str());
  }
  if (check) {
    for (int r = 0; r <= d; ++r)
      if (hilbert_function(d, n, r) != hilbert_function_via_rank(d, n, r))
        return kExitCheckFailed;
  }
  return kExitOk;
}

int run_bounds(int d, int n, const std::string& format, const Output& out) {
  const BoundsReport report = bounds(d, n);
  if (format == "json")
    out.write(to_json(report));
  else
    out.write(to_text(report));
  return kExitOk;
}

int run_identity(int k, int n, const std::string& format, const Output& out) {
  const IdentityReport report = identity_check(k, n);
  if (format == "json")
    out.write(to_json(report));
  else
    out.write(to_text(report));
  return report.equal ? kExitOk : kExitCheckFailed;
}

int run_witness(int d, int n, int subset_size, bool certificates, bool timing,
                const std::string& format, const Output& out) {
  SearchReport report = proposition_search(d, n, subset_size, thread_count_from_env());
  if (!timing) report.elapsed_ms = 0;  // keep identical runs byte-identical
  if (format == "json")
    out.write(to_json(report, certificates));
  else
    out.write(to_text(report, certificates));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact power-sum decompositions of elementary symmetric polynomials, "
               "with catalecticant rank certificates"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "output format: text, json, csv, bitmap")
      ->check(CLI::IsMember({"text", "json", "csv", "bitmap"}));
  app.add_option("-o,--output", output_path, "write output to a file instead of stdout");

  int d = 0, n = 0, r = 0, k = 0, subset_size = 0;
  bool monomial = false, refine = false, check = false, certificates = false,
       timing = false;
  std::string verify_path;

  auto* sigma = app.add_subcommand("sigma", "print sigma(d,n)");
  sigma->add_option("d", d)->required();
  sigma->add_option("n", n)->required();

  auto* decompose = app.add_subcommand("decompose", "emit a power-sum decomposition");
  decompose->add_option("d", d)->required();
  decompose->add_option("n", n)->required();
  decompose->add_flag("--monomial", monomial,
                      "decompose the monomial x1*...*xn (requires d = n)");

  auto* verify_cmd = app.add_subcommand("verify", "verify a decomposition JSON file");
  verify_cmd->add_option("file", verify_path, "decomposition JSON ('-' for stdin)")
      ->required();

  auto* cat = app.add_subcommand("catalecticant",
                                 "catalecticant matrix of sigma(d,n) and its rank");
  cat->add_option("d", d)->required();
  cat->add_option("n", n)->required();
  cat->add_option("r", r)->required();
  cat->add_flag("--refine", refine, "remove zero rows and columns");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function table of the apolar quotient");
  hilbert->add_option("d", d)->required();
  hilbert->add_option("n", n)->required();
  hilbert->add_flag("--check", check, "also compute each value as a catalecticant rank");

  auto* bounds_cmd = app.add_subcommand("bounds", "rank bounds for sigma(d,n)");
  bounds_cmd->add_option("d", d)->required();
  bounds_cmd->add_option("n", n)->required();

  auto* identity = app.add_subcommand("identity", "check the power-sum summation identity");
  identity->add_option("k", k)->required();
  identity->add_option("n", n)->required();

  auto* witness = app.add_subcommand(
      "witness", "span-membership search over subsets of the sign points");
  witness->add_option("d", d)->required();
  witness->add_option("n", n)->required();
  witness->add_option("subset_size", subset_size)->required();
  witness->add_flag("--certificates", certificates, "emit the full per-subset table");
  witness->add_flag("--timing", timing, "report real elapsed time (non-deterministic)");

  for (auto* sub : {sigma, decompose, verify_cmd, cat, hilbert, bounds_cmd, identity,
                    witness})
    sub->fallthrough();  // let --format / -o appear after the subcommand

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const Output out{output_path};
  try {
    if ((format == "csv" || format == "bitmap") && !cat->parsed())
      throw std::invalid_argument("--format " + format +
                                  " is only available for 'catalecticant'");
    if (sigma->parsed()) return run_sigma(d, n, format, out);
    if (decompose->parsed()) return run_decompose(d, n, monomial, format, out);
    if (verify_cmd->parsed()) return run_verify(verify_path, format, out);
    if (cat->parsed()) return run_catalecticant(d, n, r, refine, format, out);
    if (hilbert->parsed()) return run_hilbert(d, n, check, format, out);
    if (bounds_cmd->parsed()) return run_bounds(d, n, format, out);
    if (identity->parsed()) return run_identity(k, n, format, out);
    if (witness->parsed())
      return run_witness(d, n, subset_size, certificates, timing, format, out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
