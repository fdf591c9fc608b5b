#include "abelian/grunwald.hpp"

#include <algorithm>
#include <string>

#include "abelian/errors.hpp"

namespace abelian {

std::vector<u64> first_null_vector(const std::vector<std::vector<u64>>& rows, std::size_t columns, u64 q) {
  std::vector<std::vector<u64>> m = rows;
  for (auto& row : m) {
    if (row.size() != columns) throw ValidationError("row length mismatch");
    for (auto& v : row) v %= q;
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const u64 inv = inverse_mod(m[r][c], q);
    for (auto& v : m[r]) v = mul_mod(v, inv, q);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 factor = m[i][c];
      for (std::size_t k = 0; k < columns; ++k) m[i][k] = (m[i][k] + q - mul_mod(factor, m[r][k], q)) % q;
    }
    pivots.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  while (free_col < columns && std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  if (free_col == columns) throw InternalError("null space is trivial");
  std::vector<u64> v(columns, 0);
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (q - m[i][free_col]) % q;
  return v;
}

ConstructionTrace construct_cyclic(const CyclicFieldRequest& request) {
  const u64 q = request.q;
  if (!is_prime(q)) throw ValidationError("cyclic degree " + std::to_string(q) + " is not prime");
  std::vector<u64> split = request.split_primes;
  std::sort(split.begin(), split.end());
  split.erase(std::unique(split.begin(), split.end()), split.end());
  for (u64 p : split) {
    if (!is_prime(p)) throw ValidationError("split prime " + std::to_string(p) + " is not prime");
  }
  const Config& config = request.avoid.fixing_subgroup().parent().config();
  const u64 bound = request.search_bound.value_or(config.prime_search_bound);
  const u64 avoid_conductor = request.avoid.conductor();

  // 1. The |T| + 1 smallest admissible primes ell = 1 (mod q).
  std::vector<u64> ells;
  for (u64 ell = q + 1; ell <= bound && ells.size() < split.size() + 1; ell += q) {
    if (!is_prime(ell)) continue;
    if (std::binary_search(split.begin(), split.end(), ell)) continue;
    if (avoid_conductor % ell == 0) continue;
    ells.push_back(ell);
  }
  if (ells.size() < split.size() + 1) {
    throw SearchExhausted("found only " + std::to_string(ells.size()) + " primes = 1 mod " + std::to_string(q) +
                          " below " + std::to_string(bound) + ", need " + std::to_string(split.size() + 1));
  }
  u64 modulus = 1;
  for (u64 ell : ells) modulus = lcm_checked(modulus, ell);

  // 2-3. Frobenius images in (Z/q)^{n+1}.
  std::vector<UnitGroupPtr> local;
  for (u64 ell : ells) local.push_back(unit_group(ell, config));
  std::vector<FrobeniusVector> frobenius;
  std::vector<std::vector<u64>> rows;
  for (u64 p : split) {
    FrobeniusVector w{p, {}};
    for (const auto& g : local) w.coordinates.push_back(discrete_log_mod_q(*g, p, q));
    rows.push_back(w.coordinates);
    frobenius.push_back(std::move(w));
  }

  // 4. A functional vanishing on all of them.
  const std::vector<u64> chi = first_null_vector(rows, ells.size(), q);

  // 5. H_L = ker(chi o dlog mod q). The components of (Z/m)* are the ell_i in
  // ascending order with their least primitive roots, so the coordinates are
  // exactly the discrete logs used above.
  const auto group = unit_group(modulus, config);
  const std::size_t pivot = static_cast<std::size_t>(
      std::find_if(chi.begin(), chi.end(), [](u64 v) { return v != 0; }) - chi.begin());
  const u64 inv = inverse_mod(chi[pivot], q);
  std::vector<Coordinates> gens;
  Coordinates v(ells.size(), 0);
  v[pivot] = static_cast<i64>(q);
  gens.push_back(v);
  for (std::size_t j = 0; j < ells.size(); ++j) {
    if (j == pivot) continue;
    Coordinates e(ells.size(), 0);
    e[j] = 1;
    e[pivot] = -static_cast<i64>(mul_mod(chi[j], inv, q));
    gens.push_back(std::move(e));
  }
  AbelianField field = fixed_field(subgroup_from_coordinates(group, gens));

  if (field.degree() != q) {
    throw InternalError("constructed field has degree " + std::to_string(field.degree()) + ", expected " +
                        std::to_string(q));
  }
  for (u64 p : split) {
    if (!totally_split(field, p)) throw InternalError(std::to_string(p) + " does not split totally");
  }
  if (!linearly_disjoint(field, request.avoid)) throw InternalError("constructed field meets the avoided field");

  return ConstructionTrace{q, std::move(split), std::move(ells), modulus, std::move(frobenius), chi, std::move(field)};
}

}  // namespace abelian
