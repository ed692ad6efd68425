#include <triquad/sieve.hpp>

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace triquad {

std::vector<bool> fn_image_mod(unsigned n, u64 s) {
  if (s < 2) throw std::invalid_argument("fn_image_mod: modulus must be >= 2");
  std::vector<bool> img(s, false);
  for (u64 u = 0; u <= s / 2; ++u) {
    img[fn_eval_mod(n, u, 1, s)] = true;
  }
  return img;
}

namespace {
std::mutex g_image_mutex;
std::map<std::pair<unsigned, u64>, std::shared_ptr<const std::vector<bool>>> g_image_cache;
constexpr u64 kImageCacheMax = 1024;
}  // namespace

std::shared_ptr<const std::vector<bool>> fn_image(unsigned n, u64 s) {
  if (s <= kImageCacheMax) {
    std::lock_guard<std::mutex> lock(g_image_mutex);
    auto& slot = g_image_cache[{n, s}];
    if (!slot) slot = std::make_shared<const std::vector<bool>>(fn_image_mod(n, s));
    return slot;
  }
  return std::make_shared<const std::vector<bool>>(fn_image_mod(n, s));
}

std::vector<u64> pow_cycle(u64 p, u64 s) {
  if (s < 2) throw std::invalid_argument("pow_cycle: modulus must be >= 2");
  std::vector<u64> out;
  std::vector<bool> seen(s, false);
  u64 x = p % s;
  while (!seen[x]) {
    seen[x] = true;
    out.push_back(x);
    x = mul_mod(x, p % s, s);
  }
  return out;
}

namespace {

// true iff sign * p^k misses the image of f_n mod s for every k >= 1
bool all_targets_miss(u64 p, int sign, u64 s, const std::vector<bool>& img) {
  for (u64 r : pow_cycle(p, s)) {
    if (sign >= 0 && img[r]) return false;
    if (sign <= 0 && img[(s - r) % s]) return false;
  }
  return true;
}

bool apparition_excluded(u64 p, unsigned n, int chi) {
  if (p < 5 || !is_prime(p)) return false;
  if (n < 3 || !is_prime(static_cast<u64>(n))) return false;
  if (chi != legendre(-6, p)) return false;
  u64 span = chi == 1 ? p - 1 : p + 1;
  return span % n != 0;
}

}  // namespace

std::optional<SieveCertificate> apparition_filter(u64 p, unsigned n) {
  int chi = chi_of(p);
  if (!apparition_excluded(p, n, chi)) return std::nullopt;
  SieveCertificate c;
  c.kind = CertKind::ApparitionFilter;
  c.p = p;
  c.n = n;
  c.sign = 0;
  c.chi = chi;
  return c;
}

std::optional<SieveCertificate> basic_sieve(u64 p, unsigned n, int sign) {
  // s = p: target == 0 mod p; a miss kills both signs at once.
  {
    auto img = fn_image(n, p);
    if (!(*img)[0]) {
      SieveCertificate c;
      c.kind = CertKind::BasicModulus;
      c.p = p;
      c.n = n;
      c.sign = 0;
      c.s = p;
      return c;
    }
  }
  for (u64 s : {p - 1, p + 1}) {
    if (s < 3) continue;
    auto img = fn_image(n, s);
    if (all_targets_miss(p, sign, s, *img)) {
      SieveCertificate c;
      c.kind = CertKind::BasicModulus;
      c.p = p;
      c.n = n;
      c.sign = sign;
      c.s = s;
      return c;
    }
  }
  return std::nullopt;
}

std::optional<SieveCertificate> order_sieve(u64 p, unsigned n, int sign,
                                            const OrderSieveParams& params) {
  constexpr u64 kLcmCap = 1000000000000ull;  // beyond this more factors stop helping
  u64 t = 1;
  std::vector<ContribModulus> contributing;
  for (u64 s = 3; s <= params.s_max; ++s) {
    if (std::gcd(s, p) != 1) continue;
    u64 ts = multiplicative_order(p, s);
    if (ts < 2 || ts > params.t_max) continue;
    if (t % ts == 0) continue;  // no new congruence information
    auto img = fn_image(n, s);
    bool empty_window = true;
    u64 r = p % s;
    for (u64 k = 1; k < ts; ++k) {
      u64 target = sign > 0 ? r : (s - r) % s;
      if ((*img)[target]) {
        empty_window = false;
        break;
      }
      r = mul_mod(r, p % s, s);
    }
    if (!empty_window) continue;
    t = std::lcm(t, ts);
    contributing.push_back({s, ts});
    if (t > kLcmCap) break;
  }
  // any solution now has b == 0 (mod t); look for l with p^t == 1 (mod l)
  // whose image misses sign * 1.
  for (u64 l = 3; l <= params.l_bound; ++l) {
    if (std::gcd(l, p) != 1) continue;
    if (mod_pow(p % l, t, l) != 1 % l) continue;
    auto img = fn_image(n, l);
    u64 target = sign > 0 ? 1 % l : (l - 1) % l;
    if (!(*img)[target]) {
      SieveCertificate c;
      c.kind = CertKind::OrderSieve;
      c.p = p;
      c.n = n;
      c.sign = sign;
      c.t = t;
      c.l = l;
      c.contributing = std::move(contributing);
      return c;
    }
  }
  return std::nullopt;
}

bool replay_certificate(const SieveCertificate& c) {
  if (c.p < 5 || !is_prime(c.p)) return false;
  if (c.n < 3 || c.n % 2 == 0) return false;
  switch (c.kind) {
    case CertKind::ApparitionFilter:
      return apparition_excluded(c.p, c.n, c.chi);
    case CertKind::BasicModulus: {
      if (c.s < 2) return false;
      auto img = fn_image(c.n, c.s);
      if (c.sign == 0) {
        // sign-blind form: every target is divisible by p, so it is enough
        // that no residue hit by f_n is
        return c.s == c.p && !(*img)[0];
      }
      return all_targets_miss(c.p, c.sign, c.s, *img);
    }
    case CertKind::OrderSieve: {
      if (c.sign != 1 && c.sign != -1) return false;
      u64 t = 1;
      for (const auto& cm : c.contributing) {
        if (cm.s < 3 || std::gcd(cm.s, c.p) != 1) return false;
        if (multiplicative_order(c.p, cm.s) != cm.order) return false;
        auto img = fn_image(c.n, cm.s);
        u64 r = c.p % cm.s;
        for (u64 k = 1; k < cm.order; ++k) {
          u64 target = c.sign > 0 ? r : (cm.s - r) % cm.s;
          if ((*img)[target]) return false;
          r = mul_mod(r, c.p % cm.s, cm.s);
        }
        u128 wide = static_cast<u128>(t) / std::gcd(t, cm.order) * cm.order;
        if (wide > ~static_cast<u64>(0)) return false;
        t = static_cast<u64>(wide);
      }
      if (t != c.t) return false;
      if (c.l < 3 || std::gcd(c.l, c.p) != 1) return false;
      if (mod_pow(c.p % c.l, c.t, c.l) != 1 % c.l) return false;
      auto img = fn_image(c.n, c.l);
      u64 target = c.sign > 0 ? 1 % c.l : (c.l - 1) % c.l;
      return !(*img)[target];
    }
  }
  return false;
}

}  // namespace triquad
