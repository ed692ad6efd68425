#pragma once

#include <triquad/lehmer.hpp>

#include <memory>
#include <optional>
#include <vector>

namespace triquad {

// Residues attained by f_n(u, 1) mod s over all u.  f_n is even in u, so
// enumerating u in [0, s/2] suffices.  Bit r is set iff r is attained.
std::vector<bool> fn_image_mod(unsigned n, u64 s);

// Same image through a process-wide cache (kept for s <= 1024, where the
// order sieve re-requests the same (n, s) pairs across many p).  Thread-safe.
std::shared_ptr<const std::vector<bool>> fn_image(unsigned n, u64 s);

// {p^k mod s : k >= 1} in order of k, one full period (first repeated value
// closes the cycle; works also when gcd(p, s) > 1).
std::vector<u64> pow_cycle(u64 p, u64 s);

// A certificate is a replayable refutation of "f_n(u, e) = sign * p^b has a
// solution with integer u, b >= 1, e = +-1".  f_n(u, -1) = f_n(u, 1), so the
// seed sign never matters; `sign` is the sign of the target.
//
// - ApparitionFilter: p never divides f_n(u, 1), because a prime n >= 3 can
//   divide some f_n(u, 1) mod p only when n | p - chi, chi = legendre(-6, p).
//   Kills both target signs at once (sign = 0).
// - BasicModulus: every target value sign * p^k (k >= 1) misses the image of
//   f_n mod s.  With s = p and 0 missing the image this is the enumerated
//   form of the apparition kill (sign = 0); with other s it is sign-specific.
// - OrderSieve: each contributing modulus s has ord_s(p) = order and all of
//   sign * p^k, 0 < k < order, miss the image mod s, forcing b == 0 mod
//   order; therefore b == 0 mod t, t = lcm of the orders.  Finally
//   p^t == 1 (mod l) and sign * 1 misses the image mod l, so no b >= 1 works.
enum class CertKind { ApparitionFilter, BasicModulus, OrderSieve };

struct ContribModulus {
  u64 s = 0;
  u64 order = 0;
  bool operator==(const ContribModulus&) const = default;
};

struct SieveCertificate {
  CertKind kind = CertKind::BasicModulus;
  u64 p = 0;
  unsigned n = 0;
  int sign = 0;  // +1, -1, or 0 when the kill is sign-blind
  int chi = 0;   // ApparitionFilter
  u64 s = 0;     // BasicModulus
  u64 t = 0;     // OrderSieve
  u64 l = 0;     // OrderSieve
  std::vector<ContribModulus> contributing;  // OrderSieve

  bool operator==(const SieveCertificate&) const = default;
};

// Re-derive every claim in the certificate from scratch; true iff all hold.
bool replay_certificate(const SieveCertificate& c);

// Search helpers used by the solver; each returns a certificate that
// replay_certificate accepts, or nullopt when the technique does not apply.
std::optional<SieveCertificate> apparition_filter(u64 p, unsigned n);
std::optional<SieveCertificate> basic_sieve(u64 p, unsigned n, int sign);

struct OrderSieveParams {
  u64 s_max = 1000;
  u64 t_max = 64;
  u64 l_bound = 1000000;
};

std::optional<SieveCertificate> order_sieve(u64 p, unsigned n, int sign,
                                            const OrderSieveParams& params = {});

}  // namespace triquad
