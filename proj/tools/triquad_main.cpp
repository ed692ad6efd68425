// Command-line front end: decide (x-d)^2 + x^2 + (x+d)^2 = y^n with d = p^b.
//
// Exit codes: 0 = every verdict conclusive (and, for `verify`, the input is
// sound); 1 = some case unresolved or verification found issues; 2 = bad
// usage or I/O failure.

#include <triquad/oracle.hpp>
#include <triquad/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using triquad::u64;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("cannot write " + path);
}

void add_solver_options(CLI::App* cmd, triquad::SolverConfig& cfg) {
  cmd->add_option("--bmax-search", cfg.b_max_search,
                  "cap on b for positive-target searches");
  cmd->add_option("--umax-fallback", cfg.u_max_fallback,
                  "seed cap for the generic positive search");
  cmd->add_option("--order-smax", cfg.order.s_max, "order sieve: modulus cap");
  cmd->add_option("--order-tmax", cfg.order.t_max, "order sieve: order cap");
  cmd->add_option("--order-lbound", cfg.order.l_bound, "order sieve: closing modulus cap");
  cmd->add_option("--middle-moduli", cfg.middle_sieve_moduli,
                  "middle case: small moduli tried per candidate");
  cmd->add_option("--p2-nmax", cfg.p2_n_max, "p = 2 direct search: exponent cap");
  cmd->add_option("--p2-ymax", cfg.p2_y_max, "p = 2 direct search: y cap");
  cmd->add_option("--defective-data", cfg.defective_data,
                  "file overriding the built-in defective-pair table");
}

int run(int argc, char** argv) {
  CLI::App app{"solver for (x-d)^2 + x^2 + (x+d)^2 = y^n with d = p^b"};
  app.require_subcommand(1);

  triquad::SolverConfig cfg;
  std::string format = "md";
  u64 prime = 0;
  u64 p_max = 0;
  unsigned jobs = 1;
  bool omit_timing = false;
  std::string cert_path;
  std::string verify_path;
  u64 oracle_ymax = 0;
  u64 oracle_pmax = 5000;
  std::vector<unsigned> oracle_exponents{3, 5, 7};

  CLI::App* solve = app.add_subcommand("solve", "decide the equation for one prime");
  solve->add_option("-p,--prime", prime, "the prime p")->required();
  solve->add_option("--format", format, "output format: json, csv, or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  add_solver_options(solve, cfg);

  CLI::App* scan_cmd = app.add_subcommand("scan", "decide for every prime p <= pmax");
  scan_cmd->add_option("--pmax", p_max, "scan primes up to this bound")->required();
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_option("--format", format, "output format: json, csv, or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));
  scan_cmd->add_option("--certificates", cert_path,
                       "also write the full per-case dump (for `verify`) here");
  scan_cmd->add_flag("--omit-timing", omit_timing,
                     "drop timing from the output so reruns are byte-identical");
  add_solver_options(scan_cmd, cfg);

  CLI::App* verify = app.add_subcommand(
      "verify", "re-check a scan dump or solution table from scratch");
  verify->add_option("input", verify_path, "JSON file to verify")->required();

  CLI::App* oracle = app.add_subcommand(
      "oracle", "brute-force table by walking y and x directly (ground truth)");
  oracle->add_option("--ymax", oracle_ymax, "enumerate y up to this bound")->required();
  oracle->add_option("--pmax", oracle_pmax, "keep rows with p up to this bound");
  oracle
      ->add_option("--exponents", oracle_exponents,
                   "exponents to enumerate (default 3,5,7)")
      ->delimiter(',');
  oracle->add_option("--format", format, "output format: json, csv, or md")
      ->check(CLI::IsMember({"json", "csv", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (solve->parsed()) {
    triquad::PrimeReport pr = triquad::solve_prime(prime, cfg);
    if (format == "json") {
      std::cout << triquad::prime_report_to_json(pr);
    } else if (format == "csv") {
      std::cout << triquad::table_to_csv(pr.solutions);
    } else {
      std::cout << "p: " << pr.p << "\nstatus: " << triquad::to_string(pr.status)
                << "\nbounded: " << (pr.bounded ? "yes" : "no") << "\n\n"
                << triquad::table_to_markdown(pr.solutions);
    }
    return pr.status == triquad::Status::Unresolved ? 1 : 0;
  }

  if (scan_cmd->parsed()) {
    triquad::ScanResult r = triquad::scan(p_max, cfg, jobs);
    if (omit_timing) r.elapsed_ms = -1;
    if (!cert_path.empty()) write_file(cert_path, triquad::scan_to_json(r, true));
    if (format == "json") {
      std::cout << triquad::scan_to_json(r, false);
    } else if (format == "csv") {
      std::cout << triquad::table_to_csv(r.table);
    } else {
      std::cout << triquad::scan_to_markdown(r);
    }
    return r.unresolved == 0 ? 0 : 1;
  }

  if (verify->parsed()) {
    std::string text = read_file(verify_path);
    std::vector<triquad::VerifyIssue> issues;
    bool is_scan = text.find("\"scan_report\"") != std::string::npos;
    if (is_scan) {
      issues = triquad::verify_scan(triquad::scan_from_json(text));
    } else {
      issues = triquad::verify_table(triquad::table_from_json(text));
    }
    if (issues.empty()) {
      std::cout << "ok: " << (is_scan ? "scan report" : "solution table")
                << " verified\n";
      return 0;
    }
    for (const triquad::VerifyIssue& issue : issues) {
      std::cout << "issue: " << issue.where << ": " << issue.what << "\n";
    }
    return 1;
  }

  // oracle
  std::vector<triquad::Solution> rows =
      triquad::oracle_enumerate(oracle_ymax, oracle_exponents, oracle_pmax);
  if (format == "json") {
    std::cout << triquad::table_to_json(rows);
  } else if (format == "csv") {
    std::cout << triquad::table_to_csv(rows);
  } else {
    std::cout << triquad::table_to_markdown(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
