#pragma once

#include <triquad/defective.hpp>
#include <triquad/sieve.hpp>

#include <optional>
#include <string>
#include <vector>

namespace triquad {

// Decide 3x^2 + 2 p^(2b) = y^n (the three-squares form with d = p^b) for one
// prime p, across all b >= 0 and n >= 3.  Every primitive solution comes from
// a seed (u, v) with y = 3u^2 + 2v^2 and v * f_n(u, v) = +-p^b; splitting on
// j = val_p(v) gives the five cases below.  Even n dies mod 3, and odd
// composite n reduces to its prime divisors (rows for composite exponents
// reappear through the perfect-power closure of the found rows).
enum class CaseId {
  EvenExponent,  // n even: y^n is a square, but 3x^2 + 2d^2 == 2 (mod 3)
  UnitD,         // b = 0: v = +-1 and f_n(u, v) = +-1
  UnitCofactor,  // j = b: |v| = p^b, f_n(u, v) = +-1
  MiddleSplit,   // 0 < j < b: p | v and p | f_n force n = p
  UnitV,         // j = 0: |v| = 1, f_n(u, 1) = +-p^b
  Valuation,     // p = 3 only: 3 | y forces 3 | x, breaking primitivity
  DirectSearch,  // p = 2 only: bounded direct search over (y, n, b)
};

enum class Status { NoSolution, Solutions, Unresolved };

const char* to_string(CaseId id);
const char* to_string(Status st);

struct CaseReport {
  CaseId id = CaseId::UnitV;
  std::vector<unsigned> exponents;  // prime exponents covered; empty = the whole class
  int sign = 0;                     // target sign, 0 when the reasoning is sign-blind
  Status status = Status::NoSolution;
  std::string justification;
  std::optional<SieveCertificate> certificate;
  std::vector<Solution> found;
  bool bounded = false;  // conclusion limited by a search cutoff
};

struct SolverConfig {
  unsigned b_max_search = 64;     // positive-target searches try b = 1..b_max_search
  u64 u_max_fallback = 10000;     // seed cap for the generic positive search
  OrderSieveParams order;         // order sieve budget
  unsigned middle_sieve_moduli = 24;  // small-prime moduli tried per middle candidate
  unsigned p2_n_max = 31;         // p = 2 direct search: exponent cap
  u64 p2_y_max = 20000;           // p = 2 direct search: y cap
  std::string defective_data;     // path overriding the embedded defective-pair table
};

struct PrimeReport {
  u64 p = 0;
  std::vector<CaseReport> cases;
  std::vector<Solution> solutions;  // closed under perfect-power rewrites, sorted, unique
  Status status = Status::NoSolution;
  bool bounded = false;  // some contributing case hit a search cutoff
};

PrimeReport solve_prime(u64 p, const SolverConfig& cfg = {});

// --- building blocks, exposed for targeted testing ---------------------------

// n = 3, positive target: 9u^2 - 2 = p^b has a solution iff (p^b + 2)/9 is a
// perfect square; checks b = 1..b_max.  Returns (u, b) hits.
std::vector<std::pair<mpz_class, unsigned>> search_cube_target(u64 p, unsigned b_max);

// n = 5: 45u^4 - 60u^2 + 4 = sign * p^b, solved through the quadratic formula
// in u^2; checks b = 1..b_max for one sign.  Returns (u, b) hits.
std::vector<std::pair<mpz_class, unsigned>> search_quintic_target(u64 p, int sign,
                                                                  unsigned b_max);

// Generic positive-target search: exact f_n(u, 1) for u = 1..u_max while
// |f_n| <= p^b_max, collecting u with f_n(u, 1) = +p^b.
std::vector<std::pair<mpz_class, unsigned>> search_generic_target(u64 p, unsigned n,
                                                                  u64 u_max,
                                                                  unsigned b_max);

// Negative targets are decided exactly: once 9u^2 > (n-1)(n-2), the terms of
// f_n(u, 1) pair off into a positive alternating sum, so f_n > 0.  Only
// u <= sqrt((n-1)(n-2))/3 can give f_n(u, 1) = -p^b, and each is evaluated
// exactly.  Complete: no cutoff.
std::vector<std::pair<mpz_class, unsigned>> negative_range_check(u64 p, unsigned n);

// Middle case, one branch: f_p(u, v) = eps * p with |v| = p^(b-1), b >= 2.
CaseReport middle_case(u64 p, int eps, const SolverConfig& cfg);

// Exponent cap used by the middle case: the least u0 with
// 9 u0^2 >= 2 (p-1)(p-2) p^2; above it the head of f_p dominates and
// f_p(u, v) > p for every |v| >= p.
mpz_class middle_u0(u64 p);

}  // namespace triquad
