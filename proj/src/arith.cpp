#include "abelian/arith.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "abelian/errors.hpp"

namespace abelian {

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm_checked(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  u128 l = static_cast<u128>(a / gcd(a, b)) * b;
  if (l >= kModulusLimit) throw CapExceeded("modulus exceeds 2^62");
  return static_cast<u64>(l);
}

Xgcd xgcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  auto [g, s, t] = xgcd(static_cast<i64>(a % m), static_cast<i64>(m));
  (void)t;
  if (g != 1) throw ValidationError("residue not invertible modulo " + std::to_string(m));
  i64 r = s % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

constexpr u64 kTrialDivisionBound = 1 << 16;

u64 pollard_brent(u64 n, u64 c) {
  auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
  u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  const u64 m = 128;
  do {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    do {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
      }
      g = gcd(q, n);
      k += m;
    } while (k < r && g == 1);
    r <<= 1;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_large(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = pollard_brent(n, c);
    if (d != n) {
      factor_large(d, out);
      factor_large(n / d, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(u64 n) {
  if (n == 0) throw ValidationError("cannot factor 0");
  std::vector<u64> primes;
  for (u64 p = 2; p < kTrialDivisionBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_large(n, primes);
  std::sort(primes.begin(), primes.end());
  Factorization result;
  for (u64 p : primes) {
    if (!result.empty() && result.back().prime == p) {
      ++result.back().exponent;
    } else {
      result.push_back({p, 1});
    }
  }
  return result;
}

u64 euler_phi(const Factorization& f) {
  u64 phi = 1;
  for (const auto& [p, a] : f) {
    phi *= p - 1;
    for (unsigned i = 1; i < a; ++i) phi *= p;
  }
  return phi;
}

u64 euler_phi(u64 n) { return euler_phi(factor(n)); }

bool is_squarefree(u64 n) {
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

u64 ipow(u64 base, unsigned exp) {
  u128 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    r *= base;
    if (r >= kModulusLimit) throw CapExceeded("integer power exceeds 2^62");
  }
  return static_cast<u64>(r);
}

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

u64 multiplicative_order(u64 x, u64 m, u64 group_order,
                         const Factorization& group_order_factors) {
  if (m == 1) return 1;
  u64 order = group_order;
  for (const auto& [r, e] : group_order_factors) {
    for (unsigned i = 0; i < e && order % r == 0; ++i) {
      if (pow_mod(x, order / r, m) != 1) break;
      order /= r;
    }
  }
  return order;
}

u64 least_primitive_root(u64 p, unsigned a) {
  if (p == 2 || !is_prime(p) || a == 0) {
    throw ValidationError("primitive roots are only taken modulo odd prime powers");
  }
  const u64 modulus = ipow(p, a);
  Factorization phi_factors = factor(p - 1);
  if (a >= 2) {
    bool has_p = false;
    for (auto& pp : phi_factors) {
      if (pp.prime == p) {
        pp.exponent += a - 1;
        has_p = true;
      }
    }
    if (!has_p) {
      phi_factors.push_back({p, a - 1});
      std::sort(phi_factors.begin(), phi_factors.end(),
                [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
    }
  }
  const u64 phi = (p - 1) * (modulus / p);
  for (u64 g = 2; g < modulus; ++g) {
    if (g % p == 0) continue;
    bool primitive = true;
    for (const auto& pp : phi_factors) {
      if (pow_mod(g, phi / pp.prime, modulus) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return g;
  }
  throw SearchExhausted("no primitive root found modulo " + std::to_string(modulus));
}

namespace {

// Solves gamma^k = h for 0 <= k < r where gamma has prime order r.
u64 bsgs_prime_order(u64 gamma, u64 h, u64 m, u64 r) {
  if (h == 1) return 0;
  const u64 step = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(r))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(step * 2);
  u64 cur = 1;
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(cur, j);
    cur = mul_mod(cur, gamma, m);
  }
  const u64 giant = inverse_mod(pow_mod(gamma, step, m), m);
  u64 y = h;
  for (u64 i = 0; i <= step; ++i) {
    if (auto it = baby.find(y); it != baby.end()) {
      u64 k = i * step + it->second;
      if (k < r) return k;
    }
    y = mul_mod(y, giant, m);
  }
  throw ValidationError("element is not a power of the base");
}

}  // namespace

u64 discrete_log(u64 base, u64 x, u64 m, u64 order, const Factorization& order_factors) {
  x %= m;
  if (m == 1 || order == 1) {
    if (x % m != 1 % m) throw ValidationError("element is not a power of the base");
    return 0;
  }
  std::vector<std::pair<u64, u64>> parts;
  for (const auto& [r, e] : order_factors) {
    const u64 re = ipow(r, e);
    const u64 cofactor = order / re;
    const u64 g1 = pow_mod(base, cofactor, m);
    const u64 h1 = pow_mod(x, cofactor, m);
    const u64 gamma = pow_mod(g1, re / r, m);
    const u64 g1_inv = inverse_mod(g1, m);
    u64 k = 0;
    u64 rk = 1;
    for (unsigned i = 0; i < e; ++i) {
      u64 t = mul_mod(pow_mod(g1_inv, k, m), h1, m);
      t = pow_mod(t, re / rk / r, m);
      u64 digit = bsgs_prime_order(gamma, t, m, r);
      k += digit * rk;
      rk *= r;
    }
    parts.emplace_back(k, re);
  }
  u64 k = crt(parts);
  if (pow_mod(base, k, m) != x) throw ValidationError("element is not a power of the base");
  return k;
}

u64 crt(std::span<const std::pair<u64, u64>> residues_and_moduli) {
  u64 result = 0;
  u64 modulus = 1;
  for (const auto& [r, n] : residues_and_moduli) {
    if (n == 1) continue;
    // result + modulus * t = r (mod n)
    const u64 rm = result % n;
    const u64 diff = (r % n + n - rm) % n;
    const u64 t = mul_mod(diff, inverse_mod(modulus % n, n), n);
    const u128 next = static_cast<u128>(modulus) * n;
    if (next >= kModulusLimit) throw CapExceeded("CRT modulus exceeds 2^62");
    result = static_cast<u64>(result + static_cast<u128>(modulus) * t);
    modulus = static_cast<u64>(next);
  }
  return result;
}

}  // namespace abelian
