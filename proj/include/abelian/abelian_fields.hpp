#pragma once

// Abelian extensions of Q as (conductor, fixing subgroup) pairs.
//
// A field L inside Q(zeta_m) is the fixed field of a subgroup H of
// (Z/m)* = Gal(Q(zeta_m)/Q). Every AbelianField is stored with m equal to
// the exact conductor of L, which makes equality structural and lets the
// splitting computation read ramification straight off m.

#include <cstdint>
#include <span>

#include "abelian/config.hpp"
#include "abelian/int_poly.hpp"
#include "abelian/zmodstar.hpp"

namespace abelian {

class AbelianField {
 public:
  u64 conductor() const { return subgroup_.parent().modulus(); }
  const Subgroup& fixing_subgroup() const { return subgroup_; }
  u64 degree() const { return subgroup_.index(); }
  bool is_rational() const { return conductor() == 1; }

  friend bool operator==(const AbelianField& a, const AbelianField& b) { return a.subgroup_ == b.subgroup_; }

 private:
  explicit AbelianField(Subgroup h) : subgroup_(std::move(h)) {}
  friend AbelianField fixed_field(const Subgroup& h);

  Subgroup subgroup_;
};

struct SplittingData {
  u64 prime;
  u64 e;  // ramification index
  u64 f;  // inertia degree
  u64 g;  // number of primes above
  u64 local_degree;
  friend bool operator==(const SplittingData&, const SplittingData&) = default;
};

AbelianField rationals(const Config& config = {});

/// Q(zeta_m); m = 2 (mod 4) is replaced by m / 2.
AbelianField cyclotomic_field(u64 m, const Config& config = {});

/// Fixed field of h inside Q(zeta_m), m = h's modulus, reduced to its conductor.
AbelianField fixed_field(const Subgroup& h);
AbelianField fixed_field(u64 m, std::span<const Residue> generators, const Config& config = {});

AbelianField compositum(const AbelianField& a, const AbelianField& b);
AbelianField compositum(std::span<const AbelianField> fields, const Config& config = {});
AbelianField intersection(const AbelianField& a, const AbelianField& b);

/// True iff b is a subfield of a.
bool contains(const AbelianField& a, const AbelianField& b);

/// Intersection is Q (equivalent to linear disjointness for Galois fields).
bool linearly_disjoint(const AbelianField& a, const AbelianField& b);

/// Throws ValidationError if p is not prime.
SplittingData splitting_data(const AbelianField& field, u64 p);
u64 local_degree(const AbelianField& field, u64 p);
bool totally_split(const AbelianField& field, u64 p);

/// Largest n with zeta_n in the field (always even).
u64 roots_of_unity(const AbelianField& field);

/// Monic minimal polynomial of the Gaussian period sum_{h in H} zeta_m^h.
///
/// The conjugate periods are evaluated with MPFR, starting at 64 * degree
/// bits and doubling up to three times until every coefficient of the
/// product rounds to an integer within 0.25. Throws CapExceeded past
/// `period_degree_cap`, PrecisionInsufficient when rounding never settles,
/// and ValidationError when two conjugates coincide (the period does not
/// generate the field).
IntPolynomial period_minimal_polynomial(const AbelianField& field);

}  // namespace abelian
