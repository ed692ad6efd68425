#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <triquad/quadring.hpp>

using namespace triquad;

TEST_CASE("qmul_matches_hand_expansion") {
  // (1 + 2w)(3 + 4w) with w^2 = -6: 3 + 4w + 6w + 8w^2 = -45 + 10w
  QuadInt x{1, 2}, y{3, 4};
  QuadInt z = qmul(x, y);
  CHECK(z.a == -45);
  CHECK(z.c == 10);
  // commutes
  QuadInt zr = qmul(y, x);
  CHECK(z == zr);
}

TEST_CASE("qnorm_is_multiplicative") {
  for (int a1 = -3; a1 <= 3; ++a1)
    for (int c1 = -3; c1 <= 3; ++c1)
      for (int a2 = -3; a2 <= 3; ++a2)
        for (int c2 = -3; c2 <= 3; ++c2) {
          QuadInt x{a1, c1}, y{a2, c2};
          CHECK(qnorm(qmul(x, y)) == qnorm(x) * qnorm(y));
        }
}

TEST_CASE("qconj_properties") {
  QuadInt x{5, -7};
  QuadInt xc = qconj(x);
  CHECK(xc.a == 5);
  CHECK(xc.c == 7);
  QuadInt prod = qmul(x, xc);
  CHECK(prod.a == qnorm(x));
  CHECK(prod.c == 0);
}

TEST_CASE("qpow_matches_repeated_multiplication") {
  QuadInt g{3, 1};  // the solver's gamma with u = v = 1
  QuadInt acc{1, 0};
  for (unsigned long e = 0; e <= 12; ++e) {
    CHECK(qpow(g, e) == acc);
    acc = qmul(acc, g);
  }
  // norm of the power = power of the norm
  mpz_class n7 = qnorm(qpow(g, 7));
  mpz_class want;
  mpz_pow_ui(want.get_mpz_t(), qnorm(g).get_mpz_t(), 7);
  CHECK(n7 == want);
}

TEST_CASE("exact_div_scalar_divides_or_throws") {
  QuadInt x{27, -54};
  QuadInt q = exact_div_scalar(x, 9);
  CHECK(q.a == 3);
  CHECK(q.c == -6);
  CHECK_THROWS_AS(exact_div_scalar(QuadInt{27, -55}, 9), std::domain_error);
}

TEST_CASE("qpow_mod_matches_exact_reduction") {
  const u64 m = 1000003;
  QuadInt g{21, 5};
  QuadIntMod gm{21, 5};
  for (u64 e : {0ull, 1ull, 2ull, 3ull, 17ull, 64ull, 101ull}) {
    QuadInt exact = qpow(g, static_cast<unsigned long>(e));
    mpz_class am = exact.a % static_cast<long>(m);
    mpz_class cm = exact.c % static_cast<long>(m);
    if (am < 0) am += static_cast<long>(m);
    if (cm < 0) cm += static_cast<long>(m);
    QuadIntMod r = qpow_mod(gm, e, m);
    CHECK(mpz_class(r.a) == am);
    CHECK(mpz_class(r.c) == cm);
  }
}

TEST_CASE("qpow_mod_large_exponent_order") {
  // gamma = 3 + w has norm 15; mod a prime q the element gamma^(q^2-1) = 1
  // whenever the norm is a unit mod q (group order divides q^2 - 1).
  const u64 q = 97;
  QuadIntMod g{3, 1};
  QuadIntMod r = qpow_mod(g, (q * q - 1), q);
  CHECK(r.a == 1);
  CHECK(r.c == 0);
}
