#pragma once

#include <triquad/ntheory.hpp>
#include <triquad/quadring.hpp>

#include <vector>

namespace triquad {

// f_n(u, v) is the normalized imaginary part of (3u + v*sqrt(-6))^n:
// writing gamma^n = X_n + Y_n*sqrt(-6), we have Y_n = 3^((n-1)/2) * v * f_n(u, v)
// for odd n, and f_n is an integer polynomial, even in u and in v.
//
// f_n(u, v) = sum_{i=0}^{(n-1)/2} binom(n, 2i+1) * 3^((n-1)/2 - i) * (-2)^i
//             * u^(n-1-2i) * v^(2i)

// coeff[i] multiplies u^(n-1-2i) * v^(2i); n must be odd, n >= 1.
struct FnPoly {
    unsigned n = 0;
    std::vector<mpz_class> coeff;
};

FnPoly fn_poly(unsigned n);

// Exact evaluation from the coefficient expansion (Horner in u^2).
mpz_class fn_eval(unsigned n, const mpz_class& u, const mpz_class& v);

// Exact evaluation through ring exponentiation: gamma^n followed by
// division of Y_n by 3^((n-1)/2) * v.  Requires v != 0.  Deliberately a
// different computation path from fn_eval; the two must always agree.
mpz_class lehmer_term(unsigned n, const mpz_class& u, const mpz_class& v);

// f_n(u, v) mod m for any m >= 2.  Uses ring exponentiation plus a modular
// division when gcd(3v, m) == 1, and otherwise the odd-index recurrence
//   w_{j+1} = A*w_j - Q^2*w_{j-1},  A = 6u^2 - 4v^2,  Q = 3u^2 + 2v^2,
// with w_0 = f_1 = 1 and w_1 = f_3 = 9u^2 - 2v^2, driven by 2x2 matrix
// exponentiation, so a single evaluation costs O(log n) multiplications.
u64 fn_eval_mod(unsigned n, u64 u, u64 v, u64 m);

// Exponent cap for the prime exponents n that can carry a solution with
// |v| = 1: a prime n >= 3 can divide p - chi or equal p, where
// chi = legendre(-6, p).  Only p >= 5 is meaningful here.
u64 bound_Bp(u64 p);

// chi = legendre(-6, p) for p >= 5.
int chi_of(u64 p);

// One table row: (x-d)^2 + x^2 + (x+d)^2 = y^n with d = p^b, equivalently
// 3x^2 + 2p^(2b) = y^n, gcd(x, y) = 1, x >= 1.
struct Solution {
    u64 p = 0;
    unsigned b = 0;
    mpz_class x;
    mpz_class y;
    unsigned n = 0;

    bool operator==(const Solution& o) const {
        return p == o.p && b == o.b && x == o.x && y == o.y && n == o.n;
    }
    bool operator<(const Solution& o) const;
};

// Rebuild the full solution from a seed (u, v) with v * f_n(u, v) = +-p^b:
// y = 3u^2 + 2v^2 and x = |X_n| / 3^((n+1)/2).  Throws if the seed does not
// produce an integral x (which would indicate a corrupted seed).
Solution reconstruct_solution(u64 p, unsigned b, const mpz_class& u,
                              const mpz_class& v, unsigned n);

// Full arithmetic re-check of a claimed row, from scratch.
bool verify_solution(const Solution& s);

}  // namespace triquad
