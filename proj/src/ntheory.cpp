#include "triquad/ntheory.hpp"

#include <numeric>

namespace triquad {

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 mod_pow(u64 a, u64 e, u64 m) {
  if (m < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

bool mr_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = mod_pow(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This base set decides primality for every n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (mr_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  std::vector<bool> composite(n + 1, false);
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

int legendre(i64 a, u64 p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: p must be an odd prime");
  }
  i64 ai = a % static_cast<i64>(p);
  u64 r = mod_pow(static_cast<u64>(ai < 0 ? ai + static_cast<i64>(p) : ai),
                  (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("multiplicative_order: modulus must be >= 2");
  a %= m;
  if (std::gcd(a, m) != 1) {
    throw std::invalid_argument("multiplicative_order: not a unit");
  }
  u64 t = 1;
  u64 x = a;
  while (x != 1 % m) {
    x = mul_mod(x, a, m);
    ++t;
  }
  return t;
}

u64 mod_inverse(u64 a, u64 m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  a %= m;
  // extended Euclid on (a, m); coefficients stay below m in magnitude
  i64 t0 = 0, t1 = 1;
  u64 r0 = m, r1 = a;
  while (r1 != 0) {
    u64 q = r0 / r1;
    u64 r2 = r0 - q * r1;
    i64 t2 = static_cast<i64>(t0 - static_cast<__int128>(q) * t1);
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: not a unit");
  return t0 < 0 ? static_cast<u64>(t0 + static_cast<i64>(m)) : static_cast<u64>(t0);
}

SqrtResult integer_sqrt(const mpz_class& n) {
  if (n < 0) throw std::invalid_argument("integer_sqrt: negative operand");
  SqrtResult r;
  mpz_class rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = (rem == 0);
  return r;
}

PowerDecomposition perfect_power(const mpz_class& y) {
  if (y < 2) throw std::invalid_argument("perfect_power: operand must be >= 2");
  unsigned maxk = std::max<unsigned>(1, mpz_sizeinbase(y.get_mpz_t(), 2));
  for (unsigned k = maxk; k >= 2; --k) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), y.get_mpz_t(), k) != 0) {
      // root^k == y exactly; root is minimal over all exponents, hence not
      // itself a perfect power when k is maximal.
      return {root, k};
    }
  }
  return {y, 1};
}

}  // namespace triquad
