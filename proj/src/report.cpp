#include <triquad/report.hpp>

#include <triquad/ntheory.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace triquad {

namespace {

using nlohmann::json;

const char* kind_name(CertKind k) {
  switch (k) {
    case CertKind::ApparitionFilter: return "apparition_filter";
    case CertKind::BasicModulus: return "basic_modulus";
    case CertKind::OrderSieve: return "order_sieve";
  }
  return "?";
}

CertKind kind_from(const std::string& s) {
  if (s == "apparition_filter") return CertKind::ApparitionFilter;
  if (s == "basic_modulus") return CertKind::BasicModulus;
  if (s == "order_sieve") return CertKind::OrderSieve;
  throw std::runtime_error("unknown certificate kind: " + s);
}

Status status_from(const std::string& s) {
  if (s == "no_solution") return Status::NoSolution;
  if (s == "solutions") return Status::Solutions;
  if (s == "unresolved") return Status::Unresolved;
  throw std::runtime_error("unknown status: " + s);
}

CaseId case_from(const std::string& s) {
  if (s == "even_exponent") return CaseId::EvenExponent;
  if (s == "unit_d") return CaseId::UnitD;
  if (s == "unit_cofactor") return CaseId::UnitCofactor;
  if (s == "middle_split") return CaseId::MiddleSplit;
  if (s == "unit_v") return CaseId::UnitV;
  if (s == "valuation") return CaseId::Valuation;
  if (s == "direct_search") return CaseId::DirectSearch;
  throw std::runtime_error("unknown case id: " + s);
}

json row_json(const Solution& s) {
  return json{{"p", s.p}, {"b", s.b}, {"x", s.x.get_str()}, {"y", s.y.get_str()},
              {"n", s.n}};
}

Solution row_from(const json& j) {
  Solution s;
  s.p = j.at("p").get<u64>();
  s.b = j.at("b").get<unsigned>();
  s.x = mpz_class(j.at("x").get<std::string>());
  s.y = mpz_class(j.at("y").get<std::string>());
  s.n = j.at("n").get<unsigned>();
  return s;
}

json rows_json(const std::vector<Solution>& rows) {
  json a = json::array();
  for (const Solution& s : rows) a.push_back(row_json(s));
  return a;
}

std::vector<Solution> rows_from(const json& a) {
  std::vector<Solution> rows;
  for (const json& j : a) rows.push_back(row_from(j));
  return rows;
}

json cert_json(const SieveCertificate& c) {
  json j{{"kind", kind_name(c.kind)}, {"p", c.p}, {"n", c.n}, {"sign", c.sign}};
  switch (c.kind) {
    case CertKind::ApparitionFilter:
      j["chi"] = c.chi;
      break;
    case CertKind::BasicModulus:
      j["s"] = c.s;
      break;
    case CertKind::OrderSieve: {
      j["t"] = c.t;
      j["l"] = c.l;
      json contrib = json::array();
      for (const ContribModulus& m : c.contributing) {
        contrib.push_back(json::array({m.s, m.order}));
      }
      j["contributing"] = std::move(contrib);
      break;
    }
  }
  return j;
}

SieveCertificate cert_from(const json& j) {
  SieveCertificate c;
  c.kind = kind_from(j.at("kind").get<std::string>());
  c.p = j.at("p").get<u64>();
  c.n = j.at("n").get<unsigned>();
  c.sign = j.at("sign").get<int>();
  switch (c.kind) {
    case CertKind::ApparitionFilter:
      c.chi = j.at("chi").get<int>();
      break;
    case CertKind::BasicModulus:
      c.s = j.at("s").get<u64>();
      break;
    case CertKind::OrderSieve:
      c.t = j.at("t").get<u64>();
      c.l = j.at("l").get<u64>();
      for (const json& e : j.at("contributing")) {
        ContribModulus m;
        m.s = e.at(0).get<u64>();
        m.order = e.at(1).get<u64>();
        c.contributing.push_back(m);
      }
      break;
  }
  return c;
}

json case_json(const CaseReport& c) {
  json j{{"case", to_string(c.id)},
         {"exponents", c.exponents},
         {"sign", c.sign},
         {"status", to_string(c.status)},
         {"bounded", c.bounded},
         {"justification", c.justification},
         {"found", rows_json(c.found)}};
  if (c.certificate) j["certificate"] = cert_json(*c.certificate);
  return j;
}

CaseReport case_from_json(const json& j) {
  CaseReport c;
  c.id = case_from(j.at("case").get<std::string>());
  c.exponents = j.at("exponents").get<std::vector<unsigned>>();
  c.sign = j.at("sign").get<int>();
  c.status = status_from(j.at("status").get<std::string>());
  c.bounded = j.at("bounded").get<bool>();
  c.justification = j.at("justification").get<std::string>();
  c.found = rows_from(j.at("found"));
  if (j.contains("certificate")) c.certificate = cert_from(j.at("certificate"));
  return c;
}

json prime_json(const PrimeReport& r) {
  json cases = json::array();
  for (const CaseReport& c : r.cases) cases.push_back(case_json(c));
  return json{{"p", r.p},
              {"status", to_string(r.status)},
              {"bounded", r.bounded},
              {"solutions", rows_json(r.solutions)},
              {"cases", std::move(cases)}};
}

PrimeReport prime_from_json(const json& j) {
  PrimeReport r;
  r.p = j.at("p").get<u64>();
  r.status = status_from(j.at("status").get<std::string>());
  r.bounded = j.at("bounded").get<bool>();
  r.solutions = rows_from(j.at("solutions"));
  for (const json& c : j.at("cases")) r.cases.push_back(case_from_json(c));
  return r;
}

json config_json(const SolverConfig& c) {
  return json{{"b_max_search", c.b_max_search},
              {"u_max_fallback", c.u_max_fallback},
              {"order_sieve", json{{"s_max", c.order.s_max},
                                   {"t_max", c.order.t_max},
                                   {"l_bound", c.order.l_bound}}},
              {"middle_sieve_moduli", c.middle_sieve_moduli},
              {"p2_n_max", c.p2_n_max},
              {"p2_y_max", c.p2_y_max},
              {"defective_data", c.defective_data}};
}

SolverConfig config_from_json(const json& j) {
  SolverConfig c;
  c.b_max_search = j.at("b_max_search").get<unsigned>();
  c.u_max_fallback = j.at("u_max_fallback").get<u64>();
  c.order.s_max = j.at("order_sieve").at("s_max").get<u64>();
  c.order.t_max = j.at("order_sieve").at("t_max").get<u64>();
  c.order.l_bound = j.at("order_sieve").at("l_bound").get<u64>();
  c.middle_sieve_moduli = j.at("middle_sieve_moduli").get<unsigned>();
  c.p2_n_max = j.at("p2_n_max").get<unsigned>();
  c.p2_y_max = j.at("p2_y_max").get<u64>();
  c.defective_data = j.at("defective_data").get<std::string>();
  return c;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw std::runtime_error("malformed JSON");
  return j;
}

void require_kind(const json& j, const char* kind) {
  if (j.value("schema_version", 0) != 1) {
    throw std::runtime_error("unsupported schema_version");
  }
  if (j.value("kind", "") != kind) {
    throw std::runtime_error(std::string("expected kind \"") + kind + "\"");
  }
}

std::string row_label(const Solution& s) {
  std::ostringstream os;
  os << "row (p=" << s.p << ", b=" << s.b << ", n=" << s.n << ")";
  return os.str();
}

std::vector<Solution> sorted_rows(std::vector<Solution> rows) {
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

ScanResult scan(u64 p_max, const SolverConfig& cfg, unsigned jobs) {
  auto t0 = std::chrono::steady_clock::now();
  ScanResult r;
  r.p_max = p_max;
  r.config = cfg;
  std::vector<u64> ps = primes_up_to(p_max);
  r.primes.resize(ps.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < ps.size(); ++i) r.primes[i] = solve_prime(ps[i], cfg);
  } else {
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto worker = [&]() {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= ps.size()) break;
          r.primes[i] = solve_prime(ps[i], cfg);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }
  r.primes_scanned = ps.size();
  for (const PrimeReport& pr : r.primes) {
    if (pr.status == Status::Unresolved) ++r.unresolved;
    if (pr.bounded) ++r.bounded;
    r.table.insert(r.table.end(), pr.solutions.begin(), pr.solutions.end());
  }
  std::sort(r.table.begin(), r.table.end());
  r.table.erase(std::unique(r.table.begin(), r.table.end()), r.table.end());
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

std::string table_to_csv(const std::vector<Solution>& rows) {
  std::ostringstream os;
  os << "p,b,x,y,n\n";
  for (const Solution& s : rows) {
    os << s.p << ',' << s.b << ',' << s.x << ',' << s.y << ',' << s.n << '\n';
  }
  return os.str();
}

std::string table_to_markdown(const std::vector<Solution>& rows) {
  std::ostringstream os;
  os << "| p | b | x | y | n |\n";
  os << "| ---: | ---: | ---: | ---: | ---: |\n";
  for (const Solution& s : rows) {
    os << "| " << s.p << " | " << s.b << " | " << s.x << " | " << s.y << " | " << s.n
       << " |\n";
  }
  return os.str();
}

std::string table_to_json(const std::vector<Solution>& rows) {
  json j{{"schema_version", 1}, {"kind", "solution_table"}, {"rows", rows_json(rows)}};
  return j.dump(1) + "\n";
}

std::string scan_to_json(const ScanResult& r, bool with_cases) {
  json j{{"schema_version", 1},
         {"kind", "scan_report"},
         {"p_max", r.p_max},
         {"config", config_json(r.config)},
         {"stats", json{{"primes_scanned", r.primes_scanned},
                        {"unresolved", r.unresolved},
                        {"bounded", r.bounded}}},
         {"table", rows_json(r.table)}};
  if (with_cases) {
    json primes = json::array();
    for (const PrimeReport& pr : r.primes) primes.push_back(prime_json(pr));
    j["primes"] = std::move(primes);
  }
  if (r.elapsed_ms >= 0) j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(1) + "\n";
}

std::string scan_to_markdown(const ScanResult& r) {
  std::ostringstream os;
  os << "# 3x^2 + 2p^(2b) = y^n, primes p <= " << r.p_max << "\n\n";
  os << "- primes scanned: " << r.primes_scanned << "\n";
  os << "- unresolved: " << r.unresolved << "\n";
  os << "- verdicts relying on a bounded search: " << r.bounded << "\n";
  if (r.elapsed_ms >= 0) os << "- elapsed: " << r.elapsed_ms << " ms\n";
  os << "\n" << table_to_markdown(r.table);
  return os.str();
}

std::string prime_report_to_json(const PrimeReport& r) {
  json j = prime_json(r);
  j["schema_version"] = 1;
  j["kind"] = "case_report";
  return j.dump(1) + "\n";
}

std::vector<Solution> table_from_json(const std::string& text) {
  json j = parse_text(text);
  require_kind(j, "solution_table");
  return rows_from(j.at("rows"));
}

ScanResult scan_from_json(const std::string& text) {
  json j = parse_text(text);
  require_kind(j, "scan_report");
  ScanResult r;
  r.p_max = j.at("p_max").get<u64>();
  r.config = config_from_json(j.at("config"));
  r.primes_scanned = j.at("stats").at("primes_scanned").get<u64>();
  r.unresolved = j.at("stats").at("unresolved").get<u64>();
  r.bounded = j.at("stats").at("bounded").get<u64>();
  r.table = rows_from(j.at("table"));
  if (j.contains("primes")) {
    for (const json& pj : j.at("primes")) r.primes.push_back(prime_from_json(pj));
  }
  r.elapsed_ms = j.contains("elapsed_ms") ? j.at("elapsed_ms").get<long long>() : -1;
  return r;
}

std::vector<VerifyIssue> verify_table(const std::vector<Solution>& rows) {
  std::vector<VerifyIssue> issues;
  for (const Solution& s : rows) {
    if (!verify_solution(s)) {
      issues.push_back({row_label(s), "fails the defining equation or side conditions"});
    }
  }
  return issues;
}

namespace {

// Rebuild the solutions a hit list implies and compare with what the case
// recorded.
bool rows_match(u64 p, unsigned n,
                const std::vector<std::pair<mpz_class, unsigned>>& hits,
                const std::vector<Solution>& recorded) {
  std::vector<Solution> expect;
  for (const auto& [u, b] : hits) {
    Solution s = reconstruct_solution(p, b, u, 1, n);
    if (verify_solution(s)) expect.push_back(s);
  }
  return sorted_rows(std::move(expect)) == sorted_rows(recorded);
}

void verify_prime_entry(const PrimeReport& pr, const SolverConfig& cfg,
                        std::vector<VerifyIssue>& issues) {
  const std::string where = "p=" + std::to_string(pr.p);
  auto flag = [&](const std::string& what) { issues.push_back({where, what}); };
  if (!is_prime(pr.p)) {
    flag("listed p is not prime");
    return;
  }

  // Rows: every listed solution must verify and belong to this p; every row a
  // case found (for this p, b >= 1) must surface in the prime's table.
  for (const Solution& s : pr.solutions) {
    if (s.p != pr.p) flag(row_label(s) + ": row listed under the wrong prime");
    if (!verify_solution(s)) flag(row_label(s) + ": fails re-verification");
  }
  std::vector<Solution> listed = sorted_rows(pr.solutions);
  for (const CaseReport& c : pr.cases) {
    for (const Solution& s : c.found) {
      if (s.p != pr.p) continue;  // informational rows (d = 1 notes)
      if (!verify_solution(s)) flag(row_label(s) + ": case row fails re-verification");
      if (!std::binary_search(listed.begin(), listed.end(), s)) {
        flag(row_label(s) + ": case row missing from the prime's table");
      }
    }
  }

  // Status / bounded aggregation must match the cases.
  bool bounded = false;
  Status expect = Status::NoSolution;
  for (const CaseReport& c : pr.cases) {
    bounded = bounded || c.bounded;
    if (c.status == Status::Unresolved) expect = Status::Unresolved;
  }
  if (expect != Status::Unresolved && !pr.solutions.empty()) expect = Status::Solutions;
  if (expect != pr.status) flag("status does not aggregate from the cases");
  if (bounded != pr.bounded) flag("bounded flag does not aggregate from the cases");

  // Certificates replay from scratch wherever they appear.
  for (const CaseReport& c : pr.cases) {
    if (!c.certificate) continue;
    const SieveCertificate& cert = *c.certificate;
    if (cert.p != pr.p) flag("certificate issued for a different prime");
    if (c.exponents.size() == 1 && cert.n != c.exponents[0]) {
      flag("certificate exponent disagrees with the case");
    }
    if (cert.sign != 0 && cert.sign != c.sign) {
      flag("certificate sign disagrees with the case");
    }
    if (!replay_certificate(cert)) {
      flag("certificate replay failed (case " + std::string(to_string(c.id)) +
           ", n=" + std::to_string(cert.n) + ", sign=" + std::to_string(c.sign) + ")");
    }
  }

  if (pr.p == 2) {
    bool direct = false;
    for (const CaseReport& c : pr.cases) {
      if (c.id == CaseId::DirectSearch) {
        direct = true;
        if (!c.bounded) flag("direct search must be flagged bounded");
      }
    }
    if (!direct) flag("p = 2 report lacks the direct-search case");
    return;
  }
  if (pr.p == 3) {
    bool val = false;
    for (const CaseReport& c : pr.cases) val = val || c.id == CaseId::Valuation;
    if (!val) flag("p = 3 report lacks the valuation case");
    return;
  }

  // p >= 5: the exponent pipeline.  Every odd prime n <= B_p must be covered
  // for both target signs, by the apparition aggregate or by a per-exponent
  // case; primes above B_p cannot divide p - chi and are covered wholesale.
  int chi = chi_of(pr.p);
  u64 bp = bound_Bp(pr.p);
  const CaseReport* aggregate = nullptr;
  std::vector<unsigned> plus, minus;
  bool middle_pos = false, middle_neg = false;
  for (const CaseReport& c : pr.cases) {
    if (c.id == CaseId::MiddleSplit) {
      if (c.exponents != std::vector<unsigned>{static_cast<unsigned>(pr.p)}) {
        flag("middle case must cover exactly n = p");
      }
      if (c.sign > 0) middle_pos = true;
      if (c.sign < 0) middle_neg = true;
      CaseReport redo;
      try {
        redo = middle_case(pr.p, c.sign, cfg);
      } catch (const std::exception& e) {
        flag(std::string("middle case re-run threw: ") + e.what());
        continue;
      }
      if (redo.status != c.status || redo.bounded != c.bounded ||
          sorted_rows(redo.found) != sorted_rows(c.found)) {
        flag("middle case re-run disagrees with the report");
      }
      continue;
    }
    if (c.id != CaseId::UnitV) continue;
    if (c.sign == 0) {
      if (aggregate) flag("duplicate apparition aggregate");
      aggregate = &c;
      for (unsigned n : c.exponents) {
        if (n < 3 || n % 2 == 0 || !is_prime(n) || n > bp) {
          flag("apparition aggregate lists n=" + std::to_string(n) +
               " outside the odd-prime range");
        } else if ((pr.p - static_cast<u64>(chi)) % n == 0) {
          flag("apparition aggregate lists n=" + std::to_string(n) +
               " although n divides p - chi");
        }
      }
      plus.insert(plus.end(), c.exponents.begin(), c.exponents.end());
      minus.insert(minus.end(), c.exponents.begin(), c.exponents.end());
      continue;
    }
    if (c.exponents.size() != 1) {
      flag("per-exponent case must cover exactly one n");
      continue;
    }
    unsigned n = c.exponents[0];
    (c.sign > 0 ? plus : minus).push_back(n);
    if (c.certificate) continue;  // replayed above
    if (c.sign < 0) {
      // Certificate-free negative verdicts rest on the exact range check;
      // re-run it.
      if (c.bounded) flag("negative range check must not be flagged bounded");
      if (!rows_match(pr.p, n, negative_range_check(pr.p, n), c.found)) {
        flag("negative range check re-run disagrees (n=" + std::to_string(n) + ")");
      }
      if (c.status != (c.found.empty() ? Status::NoSolution : Status::Solutions)) {
        flag("negative case status disagrees with its rows (n=" + std::to_string(n) +
             ")");
      }
      continue;
    }
    // Positive, no certificate: only bounded searches or an honest
    // Unresolved are possible.
    if (c.status == Status::Unresolved) continue;  // no claim to check
    if (!c.bounded) {
      flag("positive case claims completeness without a certificate (n=" +
           std::to_string(n) + ")");
      continue;
    }
    if (n == 3 || n == 5) {
      auto hits = n == 3 ? search_cube_target(pr.p, cfg.b_max_search)
                         : search_quintic_target(pr.p, +1, cfg.b_max_search);
      if (!rows_match(pr.p, n, hits, c.found)) {
        flag("positive search re-run disagrees (n=" + std::to_string(n) + ")");
      }
    } else if (c.status == Status::Solutions) {
      auto hits =
          search_generic_target(pr.p, n, cfg.u_max_fallback, cfg.b_max_search);
      if (!rows_match(pr.p, n, hits, c.found)) {
        flag("fallback search re-run disagrees (n=" + std::to_string(n) + ")");
      }
    }
  }
  if (!aggregate) flag("report lacks the apparition aggregate");
  if (!middle_pos || !middle_neg) flag("middle case missing for one target sign");
  std::sort(plus.begin(), plus.end());
  std::sort(minus.begin(), minus.end());
  for (u64 n : primes_up_to(bp)) {
    if (n < 3) continue;
    unsigned un = static_cast<unsigned>(n);
    if (!std::binary_search(plus.begin(), plus.end(), un)) {
      flag("exponent n=" + std::to_string(n) + " has no positive-sign coverage");
    }
    if (!std::binary_search(minus.begin(), minus.end(), un)) {
      flag("exponent n=" + std::to_string(n) + " has no negative-sign coverage");
    }
  }
}

}  // namespace

std::vector<VerifyIssue> verify_scan(const ScanResult& r) {
  std::vector<VerifyIssue> issues;
  if (r.primes.empty()) {
    issues.push_back({"scan", "no per-prime reports embedded (dump was written "
                              "without cases?)"});
    return issues;
  }

  // The prime list must be exactly the primes up to p_max, in order.
  std::vector<u64> expect_ps = primes_up_to(r.p_max);
  std::vector<u64> got_ps;
  for (const PrimeReport& pr : r.primes) got_ps.push_back(pr.p);
  if (got_ps != expect_ps) {
    issues.push_back({"scan", "per-prime reports do not cover exactly the primes up "
                              "to p_max"});
  }
  if (r.primes_scanned != r.primes.size()) {
    issues.push_back({"scan", "primes_scanned disagrees with the report list"});
  }

  u64 unresolved = 0, bounded = 0;
  std::vector<Solution> merged;
  for (const PrimeReport& pr : r.primes) {
    if (pr.status == Status::Unresolved) ++unresolved;
    if (pr.bounded) ++bounded;
    merged.insert(merged.end(), pr.solutions.begin(), pr.solutions.end());
    verify_prime_entry(pr, r.config, issues);
  }
  if (unresolved != r.unresolved) {
    issues.push_back({"scan", "unresolved count disagrees with the reports"});
  }
  if (bounded != r.bounded) {
    issues.push_back({"scan", "bounded count disagrees with the reports"});
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  if (merged != r.table) {
    issues.push_back({"scan", "table is not the merge of the per-prime rows"});
  }
  for (const VerifyIssue& issue : verify_table(r.table)) issues.push_back(issue);
  return issues;
}

}  // namespace triquad
