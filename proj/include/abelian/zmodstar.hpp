#pragma once

// The unit group (Z/m)* and its subgroups.
//
// (Z/m)* is written as a direct sum of cyclic components, one per odd prime
// power (least primitive root) and up to two for the 2-part ({-1, 5}).
// Every unit then has a coordinate vector of discrete logs, and a subgroup is
// a lattice L with diag(n_1, ..., n_r) Z^r <= L <= Z^r kept in Hermite
// normal form. Subgroups never need to be enumerated, so moduli with many
// prime factors (products of a dozen primes, ~10^18) stay cheap.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "abelian/arith.hpp"
#include "abelian/config.hpp"

namespace abelian {

using Residue = u64;
using Coordinates = std::vector<i64>;

enum class ComponentRole {
  odd_cyclic,    // (Z/p^a)*, p odd, generated by the least primitive root
  two_minus_one, // the {+-1} factor of (Z/2^a)*, a >= 2
  two_five,      // the <5> factor of (Z/2^a)*, a >= 3
};

struct CyclicComponent {
  u64 prime;
  unsigned exponent;
  u64 prime_power;
  ComponentRole role;
  u64 generator;           // residue modulo prime_power
  u64 order;
  Factorization order_factors;
  Residue embedded;        // generator lifted to (Z/m)*, 1 at all other primes
};

class UnitGroup {
 public:
  /// Throws ValidationError for m == 0 and CapExceeded when a prime-power
  /// factor exceeds `config.modulus_cap` or m >= 2^62.
  static std::shared_ptr<const UnitGroup> create(u64 modulus, const Config& config = {});

  u64 modulus() const { return modulus_; }
  const Factorization& prime_power_factors() const { return factors_; }
  const std::vector<CyclicComponent>& components() const { return components_; }
  std::size_t rank() const { return components_.size(); }
  std::vector<u64> component_orders() const;

  /// Euler phi(m).
  u64 order() const { return order_; }
  const Factorization& order_factors() const { return order_factors_; }

  bool is_unit(Residue x) const { return gcd(x % modulus_, modulus_) == 1; }

  /// Discrete-log coordinates of a unit; throws ValidationError otherwise.
  Coordinates coordinates(Residue x) const;
  Residue residue(std::span<const i64> coords) const;

  /// Indices of the components sitting over `prime`.
  std::vector<std::size_t> components_over(u64 prime) const;

  /// Generators (as coordinate vectors) of the kernel of reduction
  /// (Z/m)* -> (Z/d)* for a divisor d of m.
  std::vector<Coordinates> reduction_kernel(u64 divisor) const;

  const Config& config() const { return config_; }

 private:
  UnitGroup() = default;

  u64 modulus_ = 1;
  u64 order_ = 1;
  Factorization factors_;
  Factorization order_factors_;
  std::vector<CyclicComponent> components_;
  Config config_;
};

using UnitGroupPtr = std::shared_ptr<const UnitGroup>;

/// Full-rank sublattice of Z^r containing diag(moduli) Z^r, stored as the
/// unique upper-triangular Hermite basis with entries right of each pivot
/// reduced modulo that column's pivot.
class HermiteLattice {
 public:
  explicit HermiteLattice(std::vector<u64> moduli);

  void insert(std::span<const i64> v);
  bool contains(std::span<const i64> v) const;
  bool contains(const HermiteLattice& other) const;

  /// [Z^r : L], the product of the pivots.
  u64 index() const;
  u64 pivot(std::size_t j) const { return static_cast<u64>(rows_[j][j]); }

  std::size_t rank() const { return moduli_.size(); }
  const std::vector<u64>& moduli() const { return moduli_; }
  const std::vector<std::vector<i64>>& rows() const { return rows_; }

  HermiteLattice intersect(const HermiteLattice& other) const;

  friend bool operator==(const HermiteLattice&, const HermiteLattice&) = default;

 private:
  void normalize();

  std::vector<u64> moduli_;
  std::vector<std::vector<i64>> rows_;
};

class Subgroup {
 public:
  Subgroup(UnitGroupPtr parent, HermiteLattice lattice);

  const UnitGroup& parent() const { return *parent_; }
  const UnitGroupPtr& parent_ptr() const { return parent_; }
  const HermiteLattice& lattice() const { return lattice_; }

  u64 order() const;
  u64 index() const { return lattice_.index(); }

  /// Canonical generating set: the Hermite basis rows as residues, with the
  /// identity dropped, sorted ascending.
  std::vector<Residue> generators() const;

  /// Present only when materialized (order <= subgroup_enumeration_cap at
  /// closure time); sorted ascending.
  const std::optional<std::vector<Residue>>& elements() const { return elements_; }

  bool contains(Residue x) const;
  bool contains(const Subgroup& other) const;  // other <= this; same parent

  /// Enumerates all elements by walking the Hermite lattice box. Throws
  /// CapExceeded past the parent's subgroup_enumeration_cap.
  Subgroup materialized() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  UnitGroupPtr parent_;
  HermiteLattice lattice_;
  std::optional<std::vector<Residue>> elements_;
};

UnitGroupPtr unit_group(u64 modulus, const Config& config = {});

/// Smallest subgroup containing the generators. Elements are materialized iff
/// the order is at most the parent's subgroup_enumeration_cap.
Subgroup subgroup_closure(const UnitGroupPtr& parent, std::span<const Residue> generators);
Subgroup subgroup_from_coordinates(const UnitGroupPtr& parent,
                                   std::span<const Coordinates> generators);
Subgroup trivial_subgroup(const UnitGroupPtr& parent);
Subgroup full_subgroup(const UnitGroupPtr& parent);

u64 element_order(const UnitGroup& parent, Residue x);

Subgroup subgroup_join(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

/// Preimage of `small` under (Z/M)* -> (Z/m)*, where M = big->modulus().
Subgroup projection_preimage(const UnitGroupPtr& big, const Subgroup& small);

/// Image of `big` under (Z/M)* -> (Z/m)*, where m = small->modulus().
Subgroup projection_image(const UnitGroupPtr& small, const Subgroup& big);

/// log_g(x) mod q for the least primitive root g of the prime ell, q | ell - 1.
u64 discrete_log_mod_q(const UnitGroup& parent, Residue x, u64 q);

}  // namespace abelian
