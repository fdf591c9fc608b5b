#pragma once

// Word-size number theory: modular arithmetic with 128-bit intermediates,
// primality, factorization and discrete logarithms in cyclic groups.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace abelian {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Moduli must stay below this so that products fit comfortably in 128 bits
/// and sums of two residues never wrap.
inline constexpr u64 kModulusLimit = u64{1} << 62;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m);

u64 gcd(u64 a, u64 b);
u64 lcm_checked(u64 a, u64 b);  // throws CapExceeded past kModulusLimit

/// Extended gcd on signed values: returns (g, s, t) with s*a + t*b = g >= 0.
struct Xgcd {
  i64 g, s, t;
};
Xgcd xgcd(i64 a, i64 b);

/// Inverse of a modulo m; throws ValidationError when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

/// Full factorization, primes ascending. Trial division first, then Brent's
/// variant of Pollard rho with fixed starting constants (deterministic).
Factorization factor(u64 n);

u64 euler_phi(const Factorization& f);
u64 euler_phi(u64 n);

bool is_squarefree(u64 n);

u64 ipow(u64 base, unsigned exp);  // throws CapExceeded on overflow past 2^62

/// Smallest prime strictly greater than n.
u64 next_prime(u64 n);

/// Least positive primitive root modulo p^a for an odd prime p.
u64 least_primitive_root(u64 p, unsigned a);

/// Multiplicative order of x in a group of exponent dividing `group_order`
/// (whose factorization is given), modulo m.
u64 multiplicative_order(u64 x, u64 m, u64 group_order,
                         const Factorization& group_order_factors);

/// Solves base^k = x (mod m) for 0 <= k < order, where base has exactly the
/// given order. Pohlig-Hellman over the order's prime powers with
/// baby-step giant-step on each prime. Throws ValidationError if x is not
/// in the cyclic subgroup generated by base.
u64 discrete_log(u64 base, u64 x, u64 m, u64 order,
                 const Factorization& order_factors);

/// Chinese remaindering for pairwise coprime moduli.
u64 crt(std::span<const std::pair<u64, u64>> residues_and_moduli);

}  // namespace abelian
