#include <triquad/solver.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace triquad {

const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::EvenExponent: return "even_exponent";
    case CaseId::UnitD: return "unit_d";
    case CaseId::UnitCofactor: return "unit_cofactor";
    case CaseId::MiddleSplit: return "middle_split";
    case CaseId::UnitV: return "unit_v";
    case CaseId::Valuation: return "valuation";
    case CaseId::DirectSearch: return "direct_search";
  }
  return "?";
}

const char* to_string(Status st) {
  switch (st) {
    case Status::NoSolution: return "no_solution";
    case Status::Solutions: return "solutions";
    case Status::Unresolved: return "unresolved";
  }
  return "?";
}

namespace {

mpz_class pow_p(u64 p, unsigned b) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), b);
  return r;
}

// b >= 1 with m == p^b, else 0.
unsigned prime_power_exponent(const mpz_class& m, u64 p) {
  if (m < 2) return 0;
  mpz_class q = m;
  unsigned b = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
    ++b;
  }
  return q == 1 ? b : 0;
}

std::vector<unsigned> odd_primes_up_to(u64 bound) {
  std::vector<unsigned> out;
  for (u64 q : primes_up_to(bound)) {
    if (q >= 3) out.push_back(static_cast<unsigned>(q));
  }
  return out;
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> search_cube_target(u64 p, unsigned b_max) {
  std::vector<std::pair<mpz_class, unsigned>> hits;
  mpz_class pb = 1;
  for (unsigned b = 1; b <= b_max; ++b) {
    pb *= static_cast<unsigned long>(p);
    mpz_class num = pb + 2;
    if (!mpz_divisible_ui_p(num.get_mpz_t(), 9)) continue;
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), 9);
    SqrtResult r = integer_sqrt(num);
    if (r.exact && r.root > 0) hits.emplace_back(r.root, b);
  }
  return hits;
}

std::vector<std::pair<mpz_class, unsigned>> search_quintic_target(u64 p, int sign,
                                                                  unsigned b_max) {
  // 45 t^2 - 60 t + (4 - T) = 0 for t = u^2 gives t = (10 +- sqrt(80 + 5T))/15.
  std::vector<std::pair<mpz_class, unsigned>> hits;
  mpz_class pb = 1;
  for (unsigned b = 1; b <= b_max; ++b) {
    pb *= static_cast<unsigned long>(p);
    mpz_class nv = 5 * (sign > 0 ? pb : -pb) + 80;
    if (nv < 0) continue;
    SqrtResult m = integer_sqrt(nv);
    if (!m.exact) continue;
    for (int pick = 0; pick < 2; ++pick) {
      mpz_class num = pick == 0 ? mpz_class(10 + m.root) : mpz_class(10 - m.root);
      if (num < 0) continue;
      if (!mpz_divisible_ui_p(num.get_mpz_t(), 15)) continue;
      mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), 15);
      SqrtResult u = integer_sqrt(num);
      if (u.exact && u.root > 0) hits.emplace_back(u.root, b);
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& a, const auto& b2) { return a.second < b2.second || (a.second == b2.second && a.first < b2.first); });
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  return hits;
}

std::vector<std::pair<mpz_class, unsigned>> search_generic_target(u64 p, unsigned n,
                                                                  u64 u_max,
                                                                  unsigned b_max) {
  std::vector<std::pair<mpz_class, unsigned>> hits;
  mpz_class cutoff = pow_p(p, b_max);
  for (u64 uu = 1; uu <= u_max; ++uu) {
    mpz_class u = static_cast<unsigned long>(uu);
    mpz_class A = 6 * u * u - 4, Q = 3 * u * u + 2;
    mpz_class Q2 = Q * Q;
    mpz_class w0 = 1, w1 = 9 * u * u - 2;
    bool overflowed = false;
    for (unsigned k = 3; k < n; k += 2) {
      mpz_class w2 = A * w1 - Q2 * w0;
      w0 = w1;
      w1 = w2;
      if (abs(w1) > cutoff && abs(w0) > cutoff) {
        overflowed = true;
        break;
      }
    }
    if (overflowed) continue;
    if (w1 > 0 && w1 <= cutoff) {
      unsigned b = prime_power_exponent(w1, p);
      if (b >= 1) hits.emplace_back(u, b);
    }
  }
  return hits;
}

std::vector<std::pair<mpz_class, unsigned>> negative_range_check(u64 p, unsigned n) {
  // For 9u^2 > (n-1)(n-2) the terms of f_n(u, 1) decrease in magnitude, so the
  // alternating sum is at least (first term) - (second term) > 0; only the
  // finitely many u below can reach a negative target.  Exact, no cutoff.
  std::vector<std::pair<mpz_class, unsigned>> hits;
  u64 bound_sq = static_cast<u64>(n - 1) * (n - 2) / 9;
  mpz_class bound_z = static_cast<unsigned long>(bound_sq);
  mpz_class ub = integer_sqrt(bound_z).root;
  for (mpz_class u = 0; u <= ub; ++u) {
    mpz_class f = lehmer_term(n, u, 1);
    if (f >= 0) continue;
    mpz_class m = -f;
    unsigned b = prime_power_exponent(m, p);
    // u = 0 cannot appear for odd p: |f_n(0, 1)| = 2^((n-1)/2)
    if (b >= 1) hits.emplace_back(u, b);
  }
  return hits;
}

mpz_class middle_u0(u64 p) {
  mpz_class n = 2 * mpz_class(static_cast<unsigned long>(p - 1)) * (p - 2);
  n *= static_cast<unsigned long>(p);
  n *= static_cast<unsigned long>(p);
  SqrtResult r = integer_sqrt(n);
  mpz_class s = r.root;
  if (!r.exact) s += 1;
  return (s + 2) / 3;
}

namespace {

u64 primitive_root_mod_p2(u64 p) {
  u64 p2 = p * p;
  std::vector<u64> fac;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) fac.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : fac) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // lift to a generator mod p^2
    return mod_pow(g, p - 1, p2) == 1 ? g + p : g;
  }
  throw std::logic_error("primitive_root_mod_p2: none found");
}

std::vector<u64> small_sieve_moduli(u64 p, unsigned count) {
  std::vector<u64> mods;
  for (u64 q = 5; mods.size() < count; q += 2) {
    if (q != p && is_prime(q)) mods.push_back(q);
  }
  return mods;
}

}  // namespace

CaseReport middle_case(u64 p, int eps, const SolverConfig& cfg) {
  CaseReport rep;
  rep.id = CaseId::MiddleSplit;
  rep.sign = eps;
  if (p >= (1ull << 21)) {
    rep.status = Status::Unresolved;
    rep.justification = "p^3 exceeds the modular working range";
    return rep;
  }
  rep.exponents = {static_cast<unsigned>(p)};
  u64 p2 = p * p;
  // target f_p(u, v) = eps*p with p | v needs u^(p-1) == c (mod p^2),
  // c = eps * 3^(-(p-1)/2): reduce f_p mod p^2 with v == 0 (mod p).
  u64 c = mod_pow(mod_inverse(3, p2), (p - 1) / 2, p2);
  if (eps < 0) c = p2 - c;
  if (c % p != 1) {
    rep.status = Status::NoSolution;
    rep.justification =
        "every unit satisfies u^(p-1) == 1 (mod p), but the target needs "
        "u^(p-1) == eps * 3^(-(p-1)/2), which is -1 (mod p) here";
    return rep;
  }
  u64 g = primitive_root_mod_p2(p);
  u64 gp = mod_pow(g, p - 1, p2);
  u64 h = (gp - 1) / p;
  u64 c1 = (c - 1) / p;
  u64 w = mul_mod(c1, mod_inverse(h, p), p);
  u64 u1 = mod_pow(g, w, p2);
  if (mod_pow(u1, p - 1, p2) != c) {
    throw std::logic_error("middle_case: discrete-log lift failed");
  }
  mpz_class u0z = middle_u0(p);
  u64 u0 = static_cast<u64>(u0z.get_ui());
  std::set<u64> cands;
  for (u64 a = 1; a < p; ++a) {
    u64 r = mul_mod(u1, mod_pow(a, p, p2), p2);
    u64 m = std::min(r, p2 - r);
    if (m > 0 && m < u0 && m % p != 0) cands.insert(m);
  }
  std::vector<u64> mods = small_sieve_moduli(p, cfg.middle_sieve_moduli);
  u64 p3 = p2 * p;
  u64 c3 = mod_pow(mod_inverse(3, p3), (p - 1) / 2, p3);
  if (eps < 0) c3 = p3 - c3;
  size_t n_exact = 0;
  std::vector<Solution> found;
  for (u64 u : cands) {
    for (unsigned b = 2;; ++b) {
      // |v| = p^(b-1); tail domination: once 2v^2 >= 3p(p-1)u^2 the v-heavy
      // last term of f_p dominates its alternating tail, |f_p| >= 2^((p-3)/2)
      // v^(p-1) > p, killing this and every larger b.
      mpz_class v = pow_p(p, b - 1);
      if (2 * v * v >= mpz_class(3) * static_cast<unsigned long>(p) *
                           static_cast<unsigned long>(p - 1) * u * u) {
        break;
      }
      if (b > 200) throw std::logic_error("middle_case: tail bound never engaged");
      // b >= 3 means v == 0 (mod p^2), so f_p == p * 3^((p-1)/2) * u^(p-1)
      // (mod p^4) and the target forces u^(p-1) == eps * 3^(-(p-1)/2) (mod p^3).
      if (b >= 3 && mod_pow(u % p3, p - 1, p3) != c3) continue;
      bool killed = false;
      for (u64 q : mods) {
        u64 vq = mod_pow(p % q, b - 1, q);
        u64 fq = fn_eval_mod(static_cast<unsigned>(p), u % q, vq, q);
        u64 tq = eps > 0 ? mul_mod(p % q, 1, q) : (q - p % q) % q;
        if (fq != tq) {
          killed = true;
          break;
        }
      }
      if (killed) continue;
      ++n_exact;
      mpz_class f = lehmer_term(static_cast<unsigned>(p), static_cast<unsigned long>(u), v);
      if (f == eps * mpz_class(static_cast<unsigned long>(p))) {
        Solution s = reconstruct_solution(p, b, static_cast<unsigned long>(u), v,
                                          static_cast<unsigned>(p));
        if (verify_solution(s)) found.push_back(s);
      }
    }
  }
  std::ostringstream js;
  js << "p | v and p | f_n force n = p; candidates u were the " << cands.size()
     << " units below u0 = " << u0 << " with u^(p-1) == eps * 3^(-(p-1)/2) (mod p^2); "
     << "each survived to b where tail domination, the mod-p^3 refinement, or "
     << cfg.middle_sieve_moduli << " small moduli decided it; " << n_exact
     << " exact evaluations";
  rep.justification = js.str();
  rep.found = found;
  rep.status = found.empty() ? Status::NoSolution : Status::Solutions;
  return rep;
}

namespace {

CaseReport even_exponent_case() {
  CaseReport rep;
  rep.id = CaseId::EvenExponent;
  rep.status = Status::NoSolution;
  rep.justification =
      "even n makes y^n a square; squares are 0 or 1 (mod 3) but "
      "3x^2 + 2d^2 == 2d^2 == 2 (mod 3) since 3 does not divide d";
  return rep;
}

CaseReport unit_d_case(const DefectiveTable& table) {
  CaseReport rep;
  rep.id = CaseId::UnitD;
  rep.status = Status::NoSolution;
  std::string extra;
  for (unsigned n : table.indices()) {
    for (const ShapeMatch& m : shape_matches(table, n)) {
      if (m.v != 1) continue;
      // a tabulated pair of our shape with v = 1: decide it exactly
      mpz_class f = lehmer_term(n, static_cast<unsigned long>(m.u), 1);
      if (f == 1 || f == -1) {
        rep.status = Status::Solutions;
        Solution s = reconstruct_solution(0, 0, static_cast<unsigned long>(m.u), 1, n);
        rep.found.push_back(s);
      } else {
        extra += " (a tabulated pair matched the shape but its term is not a unit)";
      }
    }
  }
  rep.justification =
      "d = 1 forces |v| = 1 and |f_n(u, v)| = 1: f_3 = 9u^2 - 2 is never +-1; "
      "f_5(0) = 4, f_5(+-1) = -11, |f_5| >= 484 beyond; for prime n >= 7 a unit "
      "term would be a defective Lehmer pair of shape (12u^2, -8), absent from "
      "the tables (u = 0 gives |f_n| = 2^((n-1)/2) >= 8)" +
      extra;
  return rep;
}

void unit_cofactor_cases(u64 p, const DefectiveTable& table,
                         std::vector<CaseReport>& out) {
  {
    CaseReport r3;
    r3.id = CaseId::UnitCofactor;
    r3.exponents = {3};
    r3.status = Status::NoSolution;
    r3.justification =
        "|v| = p^b, f_3(u, v) = 9u^2 - 2v^2 = +-1 with u, v odd: "
        "9u^2 - 2v^2 == 7 (mod 8) rules out +1; "
        "9u^2 - 2v^2 == u^2 == 1 (mod 3) rules out -1";
    out.push_back(std::move(r3));
  }
  {
    CaseReport r5;
    r5.id = CaseId::UnitCofactor;
    r5.exponents = {5};
    r5.status = Status::NoSolution;
    r5.justification =
        "|v| = p^b, f_5(u, v) = 45u^4 - 60u^2v^2 + 4v^4 == 5 (mod 8) "
        "for odd u, v; the targets +-1 are 1, 7 (mod 8)";
    out.push_back(std::move(r5));
  }
  CaseReport r7;
  r7.id = CaseId::UnitCofactor;
  r7.status = Status::NoSolution;
  std::string extra;
  for (unsigned n : table.indices()) {
    for (const ShapeMatch& m : shape_matches(table, n)) {
      unsigned b = 0;
      {
        mpz_class vz = static_cast<unsigned long>(m.v);
        b = prime_power_exponent(vz, p);
      }
      if (b == 0) continue;
      mpz_class f = lehmer_term(n, static_cast<unsigned long>(m.u),
                                static_cast<unsigned long>(m.v));
      if (f == 1 || f == -1) {
        Solution s = reconstruct_solution(p, b, static_cast<unsigned long>(m.u),
                                          static_cast<unsigned long>(m.v), n);
        if (verify_solution(s)) {
          r7.status = Status::Solutions;
          r7.found.push_back(s);
          continue;
        }
      }
      extra += " (a tabulated pair matched the shape but carries no solution)";
    }
  }
  r7.justification =
      "for prime n >= 7, f_n(u, v) = +-1 would make (gamma, conj gamma) a "
      "defective Lehmer pair of shape (12u^2, -8v^2); the tables contain no "
      "such pair (u = 0 breaks gcd(u, v) = 1 when |v| > 1)" +
      extra;
  out.push_back(std::move(r7));
}

struct UnitVOutcome {
  std::vector<CaseReport> reports;
  std::vector<unsigned> apparition_excluded;
  int chi = 0;
};

UnitVOutcome unit_v_cases(u64 p, const SolverConfig& cfg) {
  UnitVOutcome out;
  out.chi = chi_of(p);
  u64 bp = bound_Bp(p);
  if (bp > 10000000ull) {
    throw std::invalid_argument("solve_prime: exponent range too large to scan");
  }
  auto make_hit_solutions = [&](CaseReport& rep, unsigned n,
                                const std::vector<std::pair<mpz_class, unsigned>>& hits) {
    for (const auto& [u, b] : hits) {
      Solution s = reconstruct_solution(p, b, u, 1, n);
      if (verify_solution(s)) rep.found.push_back(s);
    }
    rep.status = rep.found.empty() ? Status::NoSolution : Status::Solutions;
  };
  for (unsigned n : odd_primes_up_to(bp)) {
    if (auto ap = apparition_filter(p, n)) {
      out.apparition_excluded.push_back(n);
      continue;
    }
    for (int sign : {+1, -1}) {
      CaseReport rep;
      rep.id = CaseId::UnitV;
      rep.exponents = {n};
      rep.sign = sign;
      if (sign > 0) {
        std::vector<std::pair<mpz_class, unsigned>> hits;
        bool searched_exactly = n <= 5;
        if (n == 3) {
          hits = search_cube_target(p, cfg.b_max_search);
        } else if (n == 5) {
          hits = search_quintic_target(p, +1, cfg.b_max_search);
        }
        if (!hits.empty()) {
          make_hit_solutions(rep, n, hits);
          rep.bounded = true;
          rep.justification = "per-exponent solve of f_n(u, 1) = p^b for b <= " +
                              std::to_string(cfg.b_max_search);
        } else {
          auto cert = basic_sieve(p, n, sign);
          if (!cert) cert = order_sieve(p, n, sign, cfg.order);
          if (cert) {
            rep.status = Status::NoSolution;
            rep.certificate = cert;
            rep.justification = "modular certificate";
          } else if (searched_exactly) {
            rep.status = Status::NoSolution;
            rep.bounded = true;
            rep.justification =
                "no hit for b <= " + std::to_string(cfg.b_max_search) +
                " and no modular certificate within budget";
          } else {
            hits = search_generic_target(p, n, cfg.u_max_fallback, cfg.b_max_search);
            if (!hits.empty()) {
              make_hit_solutions(rep, n, hits);
              rep.bounded = true;
              rep.justification =
                  "fallback seed search, u <= " + std::to_string(cfg.u_max_fallback);
            } else {
              rep.status = Status::Unresolved;
              rep.bounded = true;
              rep.justification =
                  "no certificate within budget and no seed below the search caps";
            }
          }
        }
      } else {
        // Negative targets are decided exactly by the range check; sieve
        // certificates are still preferred for n >= 7 because the range check
        // costs an exact evaluation per candidate u.
        std::optional<SieveCertificate> cert;
        if (n >= 7) {
          cert = basic_sieve(p, n, sign);
          if (!cert) cert = order_sieve(p, n, sign, cfg.order);
        }
        if (cert) {
          rep.status = Status::NoSolution;
          rep.certificate = cert;
          rep.justification = "modular certificate";
        } else {
          auto hits = negative_range_check(p, n);
          make_hit_solutions(rep, n, hits);
          rep.justification =
              "exact: f_n(u, 1) > 0 once 9u^2 > (n-1)(n-2), and every smaller "
              "u was evaluated exactly";
        }
      }
      out.reports.push_back(std::move(rep));
    }
  }
  return out;
}

std::vector<Solution> power_closure(const std::vector<Solution>& rows) {
  std::vector<Solution> out;
  for (const Solution& s : rows) {
    out.push_back(s);
    if (s.y < 4) continue;
    PowerDecomposition pd = perfect_power(s.y);
    if (pd.exp < 2) continue;
    unsigned long total = static_cast<unsigned long>(pd.exp) * s.n;
    for (unsigned long m = 3; m <= total; ++m) {
      if (total % m != 0 || m == s.n) continue;
      Solution t = s;
      t.n = static_cast<unsigned>(m);
      mpz_pow_ui(t.y.get_mpz_t(), pd.base.get_mpz_t(),
                 static_cast<unsigned long>(total / m));
      if (verify_solution(t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PrimeReport solve_p2(const SolverConfig& cfg, const DefectiveTable& table) {
  PrimeReport rep;
  rep.p = 2;
  rep.cases.push_back(even_exponent_case());
  rep.cases.push_back(unit_d_case(table));
  CaseReport ds;
  ds.id = CaseId::DirectSearch;
  ds.bounded = true;
  ds.justification =
      "2 ramifies in the quadratic ring, so the seed factorization does not "
      "apply; direct search over odd n <= " + std::to_string(cfg.p2_n_max) +
      ", odd y <= " + std::to_string(cfg.p2_y_max) + ", and all b with "
      "2^(2b+1) < y^n (even y forces even x, breaking gcd(x, y) = 1)";
  for (unsigned n = 3; n <= cfg.p2_n_max; n += 2) {
    for (u64 y = 3; y <= cfg.p2_y_max; y += 2) {
      mpz_class yn;
      mpz_ui_pow_ui(yn.get_mpz_t(), static_cast<unsigned long>(y), n);
      mpz_class t = 8;  // 2^(2b+1) at b = 1
      for (unsigned b = 1; t < yn; ++b, t *= 4) {
        mpz_class rem = yn - t;
        if (!mpz_divisible_ui_p(rem.get_mpz_t(), 3)) continue;
        mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), 3);
        SqrtResult x = integer_sqrt(rem);
        if (!x.exact || x.root < 1) continue;
        Solution s;
        s.p = 2;
        s.b = b;
        s.x = x.root;
        s.y = static_cast<unsigned long>(y);
        s.n = n;
        if (verify_solution(s)) ds.found.push_back(s);
      }
    }
  }
  ds.status = ds.found.empty() ? Status::NoSolution : Status::Solutions;
  rep.cases.push_back(std::move(ds));
  return rep;
}

PrimeReport solve_p3(const DefectiveTable& table) {
  PrimeReport rep;
  rep.p = 3;
  rep.cases.push_back(unit_d_case(table));
  CaseReport val;
  val.id = CaseId::Valuation;
  val.status = Status::NoSolution;
  val.justification =
      "b >= 1 puts 3 | y^n, so 3 | y and 9 | y^n; then 3x^2 == -2*3^(2b) == 0 "
      "(mod 9) forces 3 | x, contradicting gcd(x, y) = 1 (covers every n >= 3)";
  rep.cases.push_back(std::move(val));
  return rep;
}

}  // namespace

PrimeReport solve_prime(u64 p, const SolverConfig& cfg) {
  if (!is_prime(p)) throw std::invalid_argument("solve_prime: p must be prime");
  DefectiveTable table = cfg.defective_data.empty()
                             ? DefectiveTable::embedded()
                             : DefectiveTable::load(cfg.defective_data);
  PrimeReport rep;
  if (p == 2) {
    rep = solve_p2(cfg, table);
  } else if (p == 3) {
    rep = solve_p3(table);
  } else {
    rep.p = p;
    rep.cases.push_back(even_exponent_case());
    rep.cases.push_back(unit_d_case(table));
    unit_cofactor_cases(p, table, rep.cases);
    for (int eps : {+1, -1}) {
      rep.cases.push_back(middle_case(p, eps, cfg));
    }
    UnitVOutcome uv = unit_v_cases(p, cfg);
    {
      CaseReport ap;
      ap.id = CaseId::UnitV;
      ap.exponents = uv.apparition_excluded;
      ap.sign = 0;
      ap.status = Status::NoSolution;
      std::ostringstream js;
      js << "|v| = 1: p | f_n(u, 1) requires n | p - chi with chi = legendre(-6, p) = "
         << uv.chi << "; the listed prime exponents do not divide " << (p - uv.chi)
         << ", and neither does any prime above the cap " << bound_Bp(p);
      ap.justification = js.str();
      rep.cases.push_back(std::move(ap));
    }
    for (CaseReport& r : uv.reports) rep.cases.push_back(std::move(r));
  }
  std::vector<Solution> all;
  for (const CaseReport& c : rep.cases) {
    // unit_d rows carry p = 0 (they are p-independent and d = 1); keep them
    // out of the per-prime table
    for (const Solution& s : c.found) {
      if (s.p == p) all.push_back(s);
    }
  }
  rep.solutions = power_closure(all);
  rep.status = Status::NoSolution;
  for (const CaseReport& c : rep.cases) {
    rep.bounded = rep.bounded || c.bounded;
    if (c.status == Status::Unresolved) rep.status = Status::Unresolved;
  }
  if (rep.status != Status::Unresolved && !rep.solutions.empty()) {
    rep.status = Status::Solutions;
  }
  if (rep.status == Status::Unresolved && !rep.solutions.empty()) {
    // solutions exist but some case stayed open; keep Unresolved as the
    // headline status, the rows are still listed
  }
  return rep;
}

}  // namespace triquad
