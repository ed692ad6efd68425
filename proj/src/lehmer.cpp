#include <triquad/lehmer.hpp>

#include <numeric>
#include <stdexcept>

namespace triquad {

FnPoly fn_poly(unsigned n) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("fn_poly: n must be odd and >= 1");
  }
  FnPoly f;
  f.n = n;
  unsigned m = (n - 1) / 2;
  f.coeff.resize(m + 1);
  // coeff[i] = binom(n, 2i+1) * 3^(m-i) * (-2)^i, built incrementally.
  mpz_class binom = n;  // binom(n, 1)
  mpz_class pow3;
  mpz_ui_pow_ui(pow3.get_mpz_t(), 3, m);
  mpz_class pow2 = 1;
  for (unsigned i = 0; i <= m; ++i) {
    f.coeff[i] = binom * pow3 * pow2;
    if (i % 2 == 1) mpz_neg(f.coeff[i].get_mpz_t(), f.coeff[i].get_mpz_t());
    if (i < m) {
      // binom(n, 2i+3) = binom(n, 2i+1) * (n-2i-1)(n-2i-2) / ((2i+2)(2i+3))
      binom *= n - 2 * i - 1;
      binom *= n - 2 * i - 2;
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(2 * i + 2) * (2 * i + 3));
      mpz_divexact_ui(pow3.get_mpz_t(), pow3.get_mpz_t(), 3);
      pow2 *= 2;
    }
  }
  return f;
}

mpz_class fn_eval(unsigned n, const mpz_class& u, const mpz_class& v) {
  FnPoly f = fn_poly(n);
  size_t m = f.coeff.size() - 1;
  mpz_class t = u * u, s = v * v;
  // result = sum_i coeff[i] * t^(m-i) * s^i, Horner in t.
  mpz_class acc = f.coeff[0];
  mpz_class sp = 1;
  for (size_t i = 1; i <= m; ++i) {
    sp *= s;
    acc = acc * t + f.coeff[i] * sp;
  }
  return acc;
}

mpz_class lehmer_term(unsigned n, const mpz_class& u, const mpz_class& v) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("lehmer_term: n must be odd and >= 1");
  }
  if (v == 0) throw std::invalid_argument("lehmer_term: v must be nonzero");
  QuadInt g{3 * u, v};
  QuadInt gn = qpow(g, n);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 3, (n - 1) / 2);
  den *= v;
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), gn.c.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("lehmer_term: Y_n not divisible by 3^((n-1)/2) v");
  return q;
}

namespace {

// w mod m for w = f_n, driven from (f_1, f_3) by the odd-index recurrence
// via 2x2 matrix power; valid for every modulus m >= 2.
u64 fn_mod_recurrence(unsigned n, u64 u, u64 v, u64 m) {
  u64 j = (n - 1) / 2;
  if (j == 0) return 1 % m;
  u64 u2 = mul_mod(u, u, m), v2 = mul_mod(v, v, m);
  u64 A = (6 * static_cast<u128>(u2) + 4 * static_cast<u128>(m - v2 % m)) % m;
  u64 Q = (3 * static_cast<u128>(u2) + 2 * static_cast<u128>(v2)) % m;
  u64 Q2 = mul_mod(Q, Q, m);
  u64 negQ2 = (m - Q2) % m;
  u64 w1 = (9 * static_cast<u128>(u2) + 2 * static_cast<u128>(m - v2 % m)) % m;
  // [[A, -Q^2], [1, 0]]^(j-1) applied to the column (w1, w0=1)
  u64 m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  u64 b00 = A, b01 = negQ2, b10 = 1 % m, b11 = 0;
  u64 e = j - 1;
  while (e) {
    if (e & 1) {
      u64 n00 = (mul_mod(m00, b00, m) + mul_mod(m01, b10, m)) % m;
      u64 n01 = (mul_mod(m00, b01, m) + mul_mod(m01, b11, m)) % m;
      u64 n10 = (mul_mod(m10, b00, m) + mul_mod(m11, b10, m)) % m;
      u64 n11 = (mul_mod(m10, b01, m) + mul_mod(m11, b11, m)) % m;
      m00 = n00; m01 = n01; m10 = n10; m11 = n11;
    }
    e >>= 1;
    if (e) {
      u64 n00 = (mul_mod(b00, b00, m) + mul_mod(b01, b10, m)) % m;
      u64 n01 = (mul_mod(b00, b01, m) + mul_mod(b01, b11, m)) % m;
      u64 n10 = (mul_mod(b10, b00, m) + mul_mod(b11, b10, m)) % m;
      u64 n11 = (mul_mod(b10, b01, m) + mul_mod(b11, b11, m)) % m;
      b00 = n00; b01 = n01; b10 = n10; b11 = n11;
    }
  }
  return (mul_mod(m00, w1, m) + m01) % m;
}

}  // namespace

u64 fn_eval_mod(unsigned n, u64 u, u64 v, u64 m) {
  if (n < 1 || n % 2 == 0) {
    throw std::invalid_argument("fn_eval_mod: n must be odd and >= 1");
  }
  if (m < 2) throw std::invalid_argument("fn_eval_mod: modulus must be >= 2");
  u %= m;
  v %= m;
  u64 den = mul_mod(mod_pow(3, (n - 1) / 2, m), v % m, m);
  if (std::gcd(den, m) == 1) {
    QuadIntMod g{static_cast<u64>(3 * static_cast<u128>(u) % m), v};
    QuadIntMod gn = qpow_mod(g, n, m);
    return mul_mod(gn.c, mod_inverse(den, m), m);
  }
  return fn_mod_recurrence(n, u, v, m);
}

int chi_of(u64 p) {
  if (p < 5) throw std::invalid_argument("chi_of: requires p >= 5");
  return legendre(-6, p);
}

u64 bound_Bp(u64 p) {
  int chi = chi_of(p);
  u64 b = chi == 1 ? p - 1 : p + 1;
  return b < 7 ? 7 : b;
}

bool Solution::operator<(const Solution& o) const {
  if (p != o.p) return p < o.p;
  if (b != o.b) return b < o.b;
  if (n != o.n) return n < o.n;
  if (y != o.y) return y < o.y;
  return x < o.x;
}

Solution reconstruct_solution(u64 p, unsigned b, const mpz_class& u,
                              const mpz_class& v, unsigned n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("reconstruct_solution: n must be odd and >= 3");
  }
  QuadInt g{3 * u, v};
  QuadInt gn = qpow(g, n);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 3, (n + 1) / 2);
  mpz_class ax = abs(gn.a);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), ax.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("reconstruct_solution: X_n not divisible by 3^((n+1)/2)");
  Solution s;
  s.p = p;
  s.b = b;
  s.x = q;
  s.y = 3 * u * u + 2 * v * v;
  s.n = n;
  return s;
}

bool verify_solution(const Solution& s) {
  if (s.p < 2 || !is_prime(s.p)) return false;
  if (s.b < 1 || s.n < 3) return false;
  if (s.x < 1 || s.y < 2) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.y.get_mpz_t());
  if (g != 1) return false;
  mpz_class d2;
  mpz_ui_pow_ui(d2.get_mpz_t(), static_cast<unsigned long>(s.p), 2ul * s.b);
  mpz_class lhs = 3 * s.x * s.x + 2 * d2;
  mpz_class rhs;
  mpz_pow_ui(rhs.get_mpz_t(), s.y.get_mpz_t(), s.n);
  return lhs == rhs;
}

}  // namespace triquad
