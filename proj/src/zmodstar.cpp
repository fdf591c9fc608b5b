#include "abelian/zmodstar.hpp"

#include <algorithm>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

i64 reduce(i128 v, u64 n) {
  i128 r = v % static_cast<i128>(n);
  if (r < 0) r += n;
  return static_cast<i64>(r);
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

Factorization merge(Factorization a, const Factorization& b) {
  for (const auto& pp : b) {
    auto it = std::find_if(a.begin(), a.end(), [&](const PrimePower& x) { return x.prime == pp.prime; });
    if (it == a.end()) {
      a.push_back(pp);
    } else {
      it->exponent += pp.exponent;
    }
  }
  std::sort(a.begin(), a.end(), [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
  return a;
}

Factorization order_factorization(u64 p, unsigned a) {
  Factorization f = (p == 2) ? Factorization{} : factor(p - 1);
  if (a >= 2) f = merge(std::move(f), Factorization{{p, a - 1}});
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitGroup

std::shared_ptr<const UnitGroup> UnitGroup::create(u64 modulus, const Config& config) {
  if (modulus == 0) throw ValidationError("modulus must be positive");
  if (modulus >= kModulusLimit) throw CapExceeded("modulus exceeds 2^62");
  std::shared_ptr<UnitGroup> g(new UnitGroup());
  g->modulus_ = modulus;
  g->config_ = config;
  g->factors_ = modulus == 1 ? Factorization{} : factor(modulus);
  for (const auto& [p, a] : g->factors_) {
    const u64 pa = ipow(p, a);
    if (pa > config.modulus_cap) {
      throw CapExceeded("prime power " + std::to_string(pa) + " exceeds modulus cap " +
                        std::to_string(config.modulus_cap));
    }
    const u64 rest = modulus / pa;
    auto embed = [&](u64 local) {
      std::pair<u64, u64> parts[] = {{local, pa}, {1, rest}};
      return crt(parts);
    };
    if (p != 2) {
      const u64 gen = least_primitive_root(p, a);
      const u64 ord = (p - 1) * (pa / p);
      g->components_.push_back(
          {p, a, pa, ComponentRole::odd_cyclic, gen, ord, order_factorization(p, a), embed(gen)});
    } else if (a >= 2) {
      g->components_.push_back(
          {2, a, pa, ComponentRole::two_minus_one, pa - 1, 2, {{2, 1}}, embed(pa - 1)});
      if (a >= 3) {
        g->components_.push_back({2, a, pa, ComponentRole::two_five, 5, pa / 4,
                                  {{2, a - 2}}, embed(5)});
      }
    }
  }
  g->order_ = euler_phi(g->factors_);
  for (const auto& c : g->components_) g->order_factors_ = merge(g->order_factors_, c.order_factors);
  return g;
}

std::vector<u64> UnitGroup::component_orders() const {
  std::vector<u64> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.order);
  return out;
}

Coordinates UnitGroup::coordinates(Residue x) const {
  x %= modulus_;
  if (gcd(x, modulus_) != 1) {
    throw ValidationError("residue " + std::to_string(x) + " is not a unit modulo " +
                          std::to_string(modulus_));
  }
  Coordinates out(components_.size(), 0);
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    const u64 local = x % c.prime_power;
    switch (c.role) {
      case ComponentRole::odd_cyclic:
        out[i] = static_cast<i64>(discrete_log(c.generator, local, c.prime_power, c.order, c.order_factors));
        break;
      case ComponentRole::two_minus_one:
        out[i] = (local % 4 == 3) ? 1 : 0;
        break;
      case ComponentRole::two_five: {
        const u64 y = (local % 4 == 3) ? c.prime_power - local : local;
        out[i] = static_cast<i64>(discrete_log(5, y, c.prime_power, c.order, c.order_factors));
        break;
      }
    }
  }
  return out;
}

Residue UnitGroup::residue(std::span<const i64> coords) const {
  Residue r = 1 % modulus_;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const u64 e = static_cast<u64>(reduce(coords[i], components_[i].order));
    r = mul_mod(r, pow_mod(components_[i].embedded, e, modulus_), modulus_);
  }
  return r;
}

std::vector<std::size_t> UnitGroup::components_over(u64 prime) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].prime == prime) out.push_back(i);
  }
  return out;
}

std::vector<Coordinates> UnitGroup::reduction_kernel(u64 divisor) const {
  if (divisor == 0 || modulus_ % divisor != 0) {
    throw ValidationError(std::to_string(divisor) + " does not divide " + std::to_string(modulus_));
  }
  std::vector<Coordinates> gens;
  auto unit = [&](std::size_t i, u64 coeff) {
    if (coeff % components_[i].order == 0) return;
    Coordinates v(components_.size(), 0);
    v[i] = static_cast<i64>(coeff);
    gens.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& c = components_[i];
    const unsigned b = valuation(divisor, c.prime);
    switch (c.role) {
      case ComponentRole::odd_cyclic:
        unit(i, b == 0 ? 1 : (c.prime - 1) * ipow(c.prime, b - 1));
        break;
      case ComponentRole::two_minus_one:
        if (b <= 1) unit(i, 1);
        break;
      case ComponentRole::two_five:
        if (b <= 1) {
          unit(i, 1);
        } else {
          unit(i, ipow(2, b - 2));
        }
        break;
    }
  }
  return gens;
}

UnitGroupPtr unit_group(u64 modulus, const Config& config) { return UnitGroup::create(modulus, config); }

// ---------------------------------------------------------------------------
// HermiteLattice

HermiteLattice::HermiteLattice(std::vector<u64> moduli) : moduli_(std::move(moduli)) {
  const std::size_t r = moduli_.size();
  rows_.assign(r, std::vector<i64>(r, 0));
  for (std::size_t j = 0; j < r; ++j) {
    if (moduli_[j] == 0) throw ValidationError("lattice modulus must be positive");
    rows_[j][j] = static_cast<i64>(moduli_[j]);
  }
}

void HermiteLattice::insert(std::span<const i64> v) {
  const std::size_t r = rank();
  if (v.size() != r) throw ValidationError("coordinate vector has wrong length");
  std::vector<i64> w(r);
  for (std::size_t k = 0; k < r; ++k) w[k] = reduce(v[k], moduli_[k]);
  for (std::size_t j = 0; j < r; ++j) {
    if (w[j] == 0) continue;
    auto& row = rows_[j];
    const i64 a = row[j];
    const i64 b = w[j];
    const auto [g, s, t] = xgcd(a, b);
    const i64 ag = a / g;
    const i64 bg = b / g;
    std::vector<i64> next_row(r, 0), next_w(r, 0);
    next_row[j] = g;
    for (std::size_t k = j + 1; k < r; ++k) {
      next_row[k] = reduce(static_cast<i128>(s) * row[k] + static_cast<i128>(t) * w[k], moduli_[k]);
      next_w[k] = reduce(static_cast<i128>(ag) * w[k] - static_cast<i128>(bg) * row[k], moduli_[k]);
    }
    row = std::move(next_row);
    w = std::move(next_w);
  }
  normalize();
}

void HermiteLattice::normalize() {
  const std::size_t r = rank();
  for (std::size_t i = 0; i < r; ++i) {
    auto& row = rows_[i];
    for (std::size_t k = i + 1; k < r; ++k) {
      const i64 h = rows_[k][k];
      const i64 q = row[k] / h;
      if (q == 0) continue;
      for (std::size_t l = k; l < r; ++l) {
        row[l] = reduce(static_cast<i128>(row[l]) - static_cast<i128>(q) * rows_[k][l], moduli_[l]);
      }
    }
  }
}

bool HermiteLattice::contains(std::span<const i64> v) const {
  const std::size_t r = rank();
  if (v.size() != r) throw ValidationError("coordinate vector has wrong length");
  std::vector<i64> w(r);
  for (std::size_t k = 0; k < r; ++k) w[k] = reduce(v[k], moduli_[k]);
  for (std::size_t j = 0; j < r; ++j) {
    const i64 h = rows_[j][j];
    if (w[j] % h != 0) return false;
    const i64 q = w[j] / h;
    if (q == 0) continue;
    for (std::size_t k = j; k < r; ++k) {
      w[k] = reduce(static_cast<i128>(w[k]) - static_cast<i128>(q) * rows_[j][k], moduli_[k]);
    }
  }
  return true;
}

bool HermiteLattice::contains(const HermiteLattice& other) const {
  if (other.moduli_ != moduli_) throw ValidationError("lattices over different groups");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const std::vector<i64>& row) { return contains(row); });
}

u64 HermiteLattice::index() const {
  u64 idx = 1;
  for (std::size_t j = 0; j < rank(); ++j) idx *= static_cast<u64>(rows_[j][j]);
  return idx;
}

HermiteLattice HermiteLattice::intersect(const HermiteLattice& other) const {
  if (other.moduli_ != moduli_) throw ValidationError("lattices over different groups");
  // Rows (b, b) for b in this and (c, 0) for c in other span a lattice whose
  // vectors with vanishing first half are exactly (0, x) for x in the
  // intersection; the Hermite basis exposes them as its last r rows.
  const std::size_t r = rank();
  std::vector<u64> doubled(moduli_);
  doubled.insert(doubled.end(), moduli_.begin(), moduli_.end());
  HermiteLattice big(doubled);
  std::vector<i64> v(2 * r);
  for (const auto& row : rows_) {
    std::copy(row.begin(), row.end(), v.begin());
    std::copy(row.begin(), row.end(), v.begin() + static_cast<std::ptrdiff_t>(r));
    big.insert(v);
  }
  for (const auto& row : other.rows_) {
    std::copy(row.begin(), row.end(), v.begin());
    std::fill(v.begin() + static_cast<std::ptrdiff_t>(r), v.end(), 0);
    big.insert(v);
  }
  HermiteLattice result(moduli_);
  for (std::size_t j = r; j < 2 * r; ++j) {
    result.insert(std::span<const i64>(big.rows_[j]).subspan(r));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(UnitGroupPtr parent, HermiteLattice lattice)
    : parent_(std::move(parent)), lattice_(std::move(lattice)) {
  if (lattice_.moduli() != parent_->component_orders()) {
    throw ValidationError("lattice does not match the unit group's components");
  }
}

u64 Subgroup::order() const { return parent_->order() / lattice_.index(); }

std::vector<Residue> Subgroup::generators() const {
  std::vector<Residue> out;
  const Residue one = 1 % parent_->modulus();
  for (const auto& row : lattice_.rows()) {
    Residue x = parent_->residue(row);
    if (x != one) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Subgroup::contains(Residue x) const {
  x %= parent_->modulus();
  if (!parent_->is_unit(x)) return false;
  if (elements_) return std::binary_search(elements_->begin(), elements_->end(), x);
  return lattice_.contains(parent_->coordinates(x));
}

bool Subgroup::contains(const Subgroup& other) const {
  if (other.parent_->modulus() != parent_->modulus()) {
    throw ValidationError("subgroups of different unit groups");
  }
  return lattice_.contains(other.lattice_);
}

Subgroup Subgroup::materialized() const {
  if (elements_) return *this;
  const u64 ord = order();
  if (ord > parent_->config().subgroup_enumeration_cap) {
    throw CapExceeded("subgroup of order " + std::to_string(ord) + " exceeds enumeration cap");
  }
  // Sums c_j * row_j with 0 <= c_j < n_j / h_j enumerate L / diag(n) exactly once.
  const u64 m = parent_->modulus();
  std::vector<Residue> elems{1 % m};
  elems.reserve(ord);
  const auto& rows = lattice_.rows();
  for (std::size_t j = 0; j < rows.size(); ++j) {
    const u64 steps = lattice_.moduli()[j] / lattice_.pivot(j);
    if (steps == 1) continue;
    const Residue g = parent_->residue(rows[j]);
    const std::size_t base = elems.size();
    Residue power = g;
    for (u64 c = 1; c < steps; ++c) {
      for (std::size_t i = 0; i < base; ++i) elems.push_back(mul_mod(elems[i], power, m));
      power = mul_mod(power, g, m);
    }
  }
  std::sort(elems.begin(), elems.end());
  Subgroup out(*this);
  out.elements_ = std::move(elems);
  return out;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return a.parent_->modulus() == b.parent_->modulus() && a.lattice_ == b.lattice_;
}

Subgroup subgroup_from_coordinates(const UnitGroupPtr& parent, std::span<const Coordinates> generators) {
  HermiteLattice lattice(parent->component_orders());
  for (const auto& g : generators) lattice.insert(g);
  return Subgroup(parent, std::move(lattice));
}

namespace {

Subgroup lattice_closure(const UnitGroupPtr& parent, std::span<const Residue> generators) {
  HermiteLattice lattice(parent->component_orders());
  for (Residue g : generators) {
    if (!parent->is_unit(g)) {
      throw ValidationError("generator " + std::to_string(g) + " is not coprime to " +
                            std::to_string(parent->modulus()));
    }
    lattice.insert(parent->coordinates(g));
  }
  return Subgroup(parent, std::move(lattice));
}

}  // namespace

Subgroup subgroup_closure(const UnitGroupPtr& parent, std::span<const Residue> generators) {
  Subgroup h = lattice_closure(parent, generators);
  if (h.order() <= parent->config().subgroup_enumeration_cap) return h.materialized();
  return h;
}

Subgroup trivial_subgroup(const UnitGroupPtr& parent) {
  return Subgroup(parent, HermiteLattice(parent->component_orders()));
}

Subgroup full_subgroup(const UnitGroupPtr& parent) {
  HermiteLattice lattice(parent->component_orders());
  for (std::size_t i = 0; i < parent->rank(); ++i) {
    Coordinates e(parent->rank(), 0);
    e[i] = 1;
    lattice.insert(e);
  }
  return Subgroup(parent, std::move(lattice));
}

u64 element_order(const UnitGroup& parent, Residue x) {
  if (!parent.is_unit(x)) {
    throw ValidationError("residue " + std::to_string(x) + " is not a unit modulo " +
                          std::to_string(parent.modulus()));
  }
  return multiplicative_order(x % parent.modulus(), parent.modulus(), parent.order(), parent.order_factors());
}

Subgroup subgroup_join(const Subgroup& a, const Subgroup& b) {
  if (a.parent().modulus() != b.parent().modulus()) throw ValidationError("subgroup parents differ");
  HermiteLattice lattice = a.lattice();
  for (const auto& row : b.lattice().rows()) lattice.insert(row);
  return Subgroup(a.parent_ptr(), std::move(lattice));
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (a.parent().modulus() != b.parent().modulus()) throw ValidationError("subgroup parents differ");
  return Subgroup(a.parent_ptr(), a.lattice().intersect(b.lattice()));
}

Subgroup projection_preimage(const UnitGroupPtr& big, const Subgroup& small) {
  const u64 M = big->modulus();
  const u64 m = small.parent().modulus();
  if (M % m != 0) {
    throw ValidationError(std::to_string(m) + " does not divide " + std::to_string(M));
  }
  HermiteLattice lattice(big->component_orders());
  for (const auto& v : big->reduction_kernel(m)) lattice.insert(v);
  // Lift each generator: keep it on the primes of m, put 1 elsewhere.
  u64 shared = 1;
  for (const auto& [p, a] : big->prime_power_factors()) {
    if (m % p == 0) shared *= ipow(p, a);
  }
  const u64 rest = M / shared;
  for (Residue x : small.generators()) {
    std::pair<u64, u64> parts[] = {{x % shared, shared}, {1, rest}};
    lattice.insert(big->coordinates(crt(parts)));
  }
  return Subgroup(big, std::move(lattice));
}

Subgroup projection_image(const UnitGroupPtr& small, const Subgroup& big) {
  const u64 m = small->modulus();
  if (big.parent().modulus() % m != 0) {
    throw ValidationError(std::to_string(m) + " does not divide " + std::to_string(big.parent().modulus()));
  }
  std::vector<Residue> reduced;
  for (Residue x : big.generators()) reduced.push_back(x % m);
  return lattice_closure(small, reduced);
}

u64 discrete_log_mod_q(const UnitGroup& parent, Residue x, u64 q) {
  const u64 ell = parent.modulus();
  if (!is_prime(ell)) throw ValidationError("discrete_log_mod_q needs a prime modulus");
  if (q == 0 || !is_prime(q) || (ell - 1) % q != 0) {
    throw ValidationError(std::to_string(q) + " is not a prime dividing " + std::to_string(ell - 1));
  }
  x %= ell;
  if (x == 0) throw ValidationError("residue is not a unit");
  if (ell == 2) return 0;
  const u64 g = parent.components().front().generator;
  const u64 cofactor = (ell - 1) / q;
  return discrete_log(pow_mod(g, cofactor, ell), pow_mod(x, cofactor, ell), ell, q, {{q, 1}});
}

}  // namespace abelian
