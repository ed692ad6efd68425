#include "triquad/quadring.hpp"

namespace triquad {

QuadInt qmul(const QuadInt& x, const QuadInt& y) {
  // (a1 + c1 w)(a2 + c2 w) with w^2 = -6
  return {x.a * y.a - 6 * x.c * y.c, x.a * y.c + x.c * y.a};
}

QuadInt qpow(const QuadInt& x, unsigned long e) {
  QuadInt r{1, 0};
  QuadInt b = x;
  while (e) {
    if (e & 1) r = qmul(r, b);
    e >>= 1;
    if (e) b = qmul(b, b);
  }
  return r;
}

QuadInt qconj(const QuadInt& x) { return {x.a, -x.c}; }

mpz_class qnorm(const QuadInt& x) { return x.a * x.a + 6 * x.c * x.c; }

QuadInt exact_div_scalar(const QuadInt& x, const mpz_class& k) {
  if (k == 0) throw std::domain_error("exact_div_scalar: zero divisor");
  QuadInt q;
  mpz_class r;
  mpz_tdiv_qr(q.a.get_mpz_t(), r.get_mpz_t(), x.a.get_mpz_t(), k.get_mpz_t());
  if (r != 0) throw std::domain_error("exact_div_scalar: not divisible");
  mpz_tdiv_qr(q.c.get_mpz_t(), r.get_mpz_t(), x.c.get_mpz_t(), k.get_mpz_t());
  if (r != 0) throw std::domain_error("exact_div_scalar: not divisible");
  return q;
}

QuadIntMod qmul_mod(const QuadIntMod& x, const QuadIntMod& y, u64 m) {
  u64 cc = mul_mod(x.c, y.c, m);
  u64 aa = mul_mod(x.a, y.a, m);
  u64 a = aa + m - mul_mod(6 % m, cc, m);
  if (a >= m) a -= m;
  u64 c = mul_mod(x.a, y.c, m) + mul_mod(x.c, y.a, m);
  if (c >= m) c -= m;
  return {a, c};
}

QuadIntMod qpow_mod(QuadIntMod x, u64 e, u64 m) {
  if (m < 2) throw std::invalid_argument("qpow_mod: modulus must be >= 2");
  QuadIntMod r{1 % m, 0};
  x.a %= m;
  x.c %= m;
  while (e) {
    if (e & 1) r = qmul_mod(r, x, m);
    e >>= 1;
    if (e) x = qmul_mod(x, x, m);
  }
  return r;
}

}  // namespace triquad
