#pragma once

#include "triquad/ntheory.hpp"

namespace triquad {

// Element a + c*sqrt(-6) of Z[sqrt(-6)].
struct QuadInt {
  mpz_class a;
  mpz_class c;
  bool operator==(const QuadInt&) const = default;
};

QuadInt qmul(const QuadInt& x, const QuadInt& y);
QuadInt qpow(const QuadInt& x, unsigned long e);
QuadInt qconj(const QuadInt& x);

// Norm a^2 + 6 c^2 = x * conj(x).
mpz_class qnorm(const QuadInt& x);

// x / k componentwise.  Throws std::domain_error unless k divides both parts.
QuadInt exact_div_scalar(const QuadInt& x, const mpz_class& k);

// Same element with both components reduced mod m.
struct QuadIntMod {
  u64 a;
  u64 c;
};

QuadIntMod qmul_mod(const QuadIntMod& x, const QuadIntMod& y, u64 m);
QuadIntMod qpow_mod(QuadIntMod x, u64 e, u64 m);

}  // namespace triquad
