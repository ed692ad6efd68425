#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace triquad {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// (a * b) mod m without overflow for any 64-bit operands.
u64 mul_mod(u64 a, u64 b, u64 m);

// a^e mod m.  Requires m >= 2.
u64 mod_pow(u64 a, u64 e, u64 m);

// Deterministic for all 64-bit inputs (fixed Miller-Rabin base set).
bool is_prime(u64 n);

// Ascending list of primes <= n.
std::vector<u64> primes_up_to(u64 n);

// Legendre symbol (a/p) in {-1, 0, 1}.  Requires p an odd prime.
int legendre(i64 a, u64 p);

// Least t >= 1 with a^t == 1 (mod m).  Requires gcd(a, m) == 1, m >= 2.
u64 multiplicative_order(u64 a, u64 m);

// a^-1 mod m.  Requires gcd(a, m) == 1, m >= 2.
u64 mod_inverse(u64 a, u64 m);

struct SqrtResult {
  mpz_class root;  // floor(sqrt(n))
  bool exact;      // root * root == n
};

// Requires n >= 0.  Exact at any operand size.
SqrtResult integer_sqrt(const mpz_class& n);

struct PowerDecomposition {
  mpz_class base;  // not itself a perfect power
  unsigned exp;    // maximal: y == base^exp; exp == 1 when y is not a power
};

// Requires y >= 2.
PowerDecomposition perfect_power(const mpz_class& y);

}  // namespace triquad
