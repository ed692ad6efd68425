#pragma once

#include <triquad/solver.hpp>

#include <string>
#include <vector>

namespace triquad {

// Aggregated result of solving every prime p <= p_max.
struct ScanResult {
  u64 p_max = 0;
  SolverConfig config;
  std::vector<PrimeReport> primes;  // ascending p
  std::vector<Solution> table;      // merged rows, sorted, deduplicated
  u64 primes_scanned = 0;
  u64 unresolved = 0;  // primes left with status Unresolved
  u64 bounded = 0;     // primes whose verdict leans on a bounded search
  long long elapsed_ms = -1;  // < 0 = omitted from output
};

// Runs solve_prime over all primes p <= p_max.  jobs > 1 splits the prime
// list across threads; assembly order is by p either way, so output is
// deterministic.
ScanResult scan(u64 p_max, const SolverConfig& cfg = {}, unsigned jobs = 1);

// Renderers.  CSV is "p,b,x,y,n" with LF line endings.  JSON carries x and y
// as decimal strings so arbitrary-precision values survive the round trip.
std::string table_to_csv(const std::vector<Solution>& rows);
std::string table_to_markdown(const std::vector<Solution>& rows);
std::string table_to_json(const std::vector<Solution>& rows);  // kind "solution_table"
// kind "scan_report"; with_cases embeds per-prime case reports and
// certificates (the form verify_scan_json consumes).
std::string scan_to_json(const ScanResult& r, bool with_cases);
std::string scan_to_markdown(const ScanResult& r);
std::string prime_report_to_json(const PrimeReport& r);

// Parsers; throw std::runtime_error on malformed input or wrong kind.
std::vector<Solution> table_from_json(const std::string& text);
ScanResult scan_from_json(const std::string& text);

struct VerifyIssue {
  std::string where;
  std::string what;
};

// Re-checks every row arithmetically: 3x^2 + 2p^(2b) = y^n, gcd(x, y) = 1,
// p prime, n >= 3.
std::vector<VerifyIssue> verify_table(const std::vector<Solution>& rows);

// Full audit of a scan report with embedded cases: every solution row
// re-verified, every sieve certificate replayed from scratch, every
// apparition-filtered exponent re-checked against n | p - chi, per-prime
// exponent coverage checked for gaps, and certificate-free conclusive cases
// re-derived (negative-range checks, small-exponent searches, middle-case
// reruns).  Empty result = report is sound.
std::vector<VerifyIssue> verify_scan(const ScanResult& r);

}  // namespace triquad
