#include <triquad/oracle.hpp>

#include <triquad/ntheory.hpp>

#include <algorithm>
#include <stdexcept>

namespace triquad {

namespace {

// d = q^e with q prime and q <= p_max?  Fills q, e on success.  Trial
// division: the oracle only sees d^2 <= y^n / 2, so d stays small.
bool prime_power_base(const mpz_class& d, u64 p_max, u64& q, unsigned& e) {
  if (d < 2) return false;
  mpz_class rest = d;
  // Smallest prime factor by trial division.
  mpz_class f = 2;
  while (f * f <= rest) {
    if (mpz_divisible_p(rest.get_mpz_t(), f.get_mpz_t())) break;
    f += (f == 2) ? 1 : 2;
  }
  if (f * f > rest) f = rest;  // d itself prime
  if (!f.fits_ulong_p()) return false;
  q = f.get_ui();
  if (q > p_max || !is_prime(q)) return false;
  e = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    ++e;
  }
  return rest == 1;
}

}  // namespace

std::vector<Solution> oracle_enumerate(u64 y_max, const std::vector<unsigned>& n_set,
                                       u64 p_max) {
  std::vector<Solution> rows;
  for (unsigned n : n_set) {
    if (n < 3) throw std::invalid_argument("oracle_enumerate: n < 3");
    for (u64 y = 2; y <= y_max; ++y) {
      mpz_class yn;
      mpz_ui_pow_ui(yn.get_mpz_t(), y, n);
      // 3x^2 rises by 6x + 3 per step; walk until it passes y^n.
      mpz_class sq = 3;  // 3 * 1^2
      for (mpz_class x = 1; sq < yn; sq += 6 * x + 3, ++x) {
        mpz_class rem = yn - sq;
        if (mpz_odd_p(rem.get_mpz_t())) continue;
        mpz_class half = rem / 2;
        SqrtResult r = integer_sqrt(half);
        if (!r.exact || r.root < 1) continue;
        if (gcd(x, mpz_class(y)) != 1) continue;
        u64 q = 0;
        unsigned e = 0;
        if (!prime_power_base(r.root, p_max, q, e)) continue;
        Solution s;
        s.p = q;
        s.b = e;
        s.x = x;
        s.y = y;
        s.n = n;
        rows.push_back(std::move(s));
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

}  // namespace triquad
