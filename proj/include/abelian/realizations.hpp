#pragma once

// Finite truncations of two realizations over Q of G = prod_{q in Lambda}
// C_{q-1}, Lambda = {q prime : q - 1 squarefree}.
//
//  * unbounded: the compositum of the Q(zeta_q). Roots of unity and local
//    degrees grow with the depth.
//  * bounded: for each q_i and each prime gamma | q_i - 1, a cyclic field of
//    degree gamma in which p_1, ..., p_i split totally and which is disjoint
//    from everything built so far. The local degree at p_n is then at most
//    prod_{m <= n} (q_m - 1).
//
// A truncation cannot prove the infinite statements; reports only witness
// monotone growth or the bound on the levels actually built.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelian/abelian_fields.hpp"
#include "abelian/grunwald.hpp"

namespace abelian {

struct LambdaPrime {
  u64 q;
  std::vector<u64> factors;  // distinct primes with product q - 1
  friend bool operator==(const LambdaPrime&, const LambdaPrime&) = default;
};

/// The first `count` primes q with q - 1 squarefree, ascending.
std::vector<LambdaPrime> lambda_primes(std::size_t count);

/// The first `count` members of Lambda that are at least 3 (q = 2 only
/// contributes the trivial factor C_1).
std::vector<LambdaPrime> nontrivial_lambda_primes(std::size_t count);

enum class RealizationKind { bounded, unbounded };

struct ComponentField {
  unsigned level;       // i: index of q_i, from 1
  unsigned index;       // j: index of gamma_{i,j} among the factors of q_i - 1, from 1
  u64 q;
  u64 gamma;            // degree of the component (q itself for unbounded)
  AbelianField field;
  std::optional<ConstructionTrace> trace;
};

struct BoundClaim {
  u64 prime;
  u64 bound;     // prod_{m <= n} (q_m - 1)
  u64 computed;  // actual local degree of the compositum
  bool holds;
};

struct Verdict {
  std::string name;
  bool holds;
};

struct RealizationReport {
  RealizationKind kind;
  unsigned depth;
  std::vector<u64> lambda_primes;   // q_1 < ... < q_k
  std::vector<u64> target_primes;   // p_1, ..., p_k (bounded kind)
  std::vector<ComponentField> components;
  AbelianField compositum;
  std::vector<SplittingData> local_degree_table;
  std::vector<BoundClaim> claimed_bounds;
  u64 roots_of_unity;
  std::vector<Verdict> verdicts;

  bool all_verdicts_hold() const;
  /// Local degree of the compositum at a prime of the table.
  std::optional<u64> local_degree_at(u64 prime) const;
};

RealizationReport unbounded_realization(unsigned depth, std::span<const u64> probe_primes,
                                        const Config& config = {});

/// `targets` needs at least `depth` primes; only the first `depth` are used.
/// Local degrees are tabulated at the targets and at `probe_primes`.
RealizationReport bounded_realization(unsigned depth, std::span<const u64> targets,
                                      std::span<const u64> probe_primes = {}, const Config& config = {});

/// Local-degree bound for the compositum of linearly disjoint stages over
/// K = Q: 1 at the first prime, prod_{j < i} |G_j| at the i-th.
u64 staged_local_degree_bound(unsigned i, std::span<const u64> orders);

}  // namespace abelian
