#include "abelian/abelian_fields.hpp"

#include <algorithm>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

Subgroup with_generators(const Subgroup& h, std::span<const Coordinates> extra) {
  HermiteLattice lattice = h.lattice();
  for (const auto& v : extra) lattice.insert(v);
  return Subgroup(h.parent_ptr(), std::move(lattice));
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

AbelianField fixed_field(const Subgroup& h) {
  Subgroup current = h;
  // Drop a prime from the modulus while H contains the kernel of reduction
  // to m / p; what remains is the conductor. The m = 2 (mod 4) case is the
  // empty kernel and is handled by the same loop.
  bool reduced = true;
  while (reduced) {
    reduced = false;
    const UnitGroup& g = current.parent();
    const u64 m = g.modulus();
    for (const auto& [p, a] : g.prime_power_factors()) {
      (void)a;
      const auto kernel = g.reduction_kernel(m / p);
      const bool inside = std::all_of(kernel.begin(), kernel.end(),
                                      [&](const Coordinates& v) { return current.lattice().contains(v); });
      if (inside) {
        current = projection_image(unit_group(m / p, g.config()), current);
        reduced = true;
        break;
      }
    }
  }
  return AbelianField(std::move(current));
}

AbelianField fixed_field(u64 m, std::span<const Residue> generators, const Config& config) {
  return fixed_field(subgroup_closure(unit_group(m, config), generators));
}

AbelianField rationals(const Config& config) { return fixed_field(trivial_subgroup(unit_group(1, config))); }

AbelianField cyclotomic_field(u64 m, const Config& config) {
  return fixed_field(trivial_subgroup(unit_group(m, config)));
}

AbelianField compositum(const AbelianField& a, const AbelianField& b) {
  const Config& config = a.fixing_subgroup().parent().config();
  const auto big = unit_group(lcm_checked(a.conductor(), b.conductor()), config);
  return fixed_field(subgroup_intersection(projection_preimage(big, a.fixing_subgroup()),
                                           projection_preimage(big, b.fixing_subgroup())));
}

AbelianField compositum(std::span<const AbelianField> fields, const Config& config) {
  AbelianField acc = rationals(config);
  for (const auto& f : fields) acc = compositum(acc, f);
  return acc;
}

AbelianField intersection(const AbelianField& a, const AbelianField& b) {
  const Config& config = a.fixing_subgroup().parent().config();
  const auto big = unit_group(lcm_checked(a.conductor(), b.conductor()), config);
  return fixed_field(subgroup_join(projection_preimage(big, a.fixing_subgroup()),
                                   projection_preimage(big, b.fixing_subgroup())));
}

bool contains(const AbelianField& a, const AbelianField& b) {
  const Config& config = a.fixing_subgroup().parent().config();
  const auto big = unit_group(lcm_checked(a.conductor(), b.conductor()), config);
  return projection_preimage(big, b.fixing_subgroup()).contains(projection_preimage(big, a.fixing_subgroup()));
}

bool linearly_disjoint(const AbelianField& a, const AbelianField& b) { return intersection(a, b).is_rational(); }

SplittingData splitting_data(const AbelianField& field, u64 p) {
  if (!is_prime(p)) throw ValidationError(std::to_string(p) + " is not prime");
  const Subgroup& h = field.fixing_subgroup();
  const UnitGroup& g = h.parent();
  const u64 m = g.modulus();
  const u64 pa = ipow(p, valuation(m, p));
  const u64 rest = m / pa;

  // Inertia: kernel of (Z/m)* -> (Z/m')*. Decomposition: inertia plus the
  // Frobenius lift t = p (mod m'), t = 1 (mod p^a).
  const Subgroup inertia_h = with_generators(h, g.reduction_kernel(rest));
  std::pair<u64, u64> parts[] = {{p % rest, rest}, {1, pa}};
  const Coordinates frob = g.coordinates(crt(parts));
  const Subgroup decomposition_h = with_generators(inertia_h, std::span<const Coordinates>(&frob, 1));

  const u64 degree = h.index();
  const u64 e = degree / inertia_h.index();
  const u64 ef = degree / decomposition_h.index();
  return {p, e, ef / e, degree / ef, ef};
}

u64 local_degree(const AbelianField& field, u64 p) { return splitting_data(field, p).local_degree; }

bool totally_split(const AbelianField& field, u64 p) { return local_degree(field, p) == 1; }

u64 roots_of_unity(const AbelianField& field) {
  const Config& config = field.fixing_subgroup().parent().config();
  u64 n = 1;
  for (const auto& [p, a] : field.fixing_subgroup().parent().prime_power_factors()) {
    u64 best = 1;
    u64 pb = p;
    for (unsigned b = 1; b <= a; ++b, pb *= p) {
      if (p == 2 && b == 1) continue;
      if (!contains(field, cyclotomic_field(pb, config))) break;
      best = pb;
    }
    n *= best;
  }
  return n % 2 == 0 ? n : 2 * n;
}

}  // namespace abelian
