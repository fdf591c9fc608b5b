#pragma once

// Explicit cyclic fields of prime degree q in which a finite set of primes
// splits completely, disjoint from a given abelian field.
//
// Take n + 1 primes ell_i = 1 (mod q) avoiding T and the conductor of F. The
// q-elementary quotient V = (Z/q)^{n+1} of (Z/prod ell_i)* (via discrete logs
// mod q) is the Galois group of a field E; a nonzero functional chi on V
// killing the Frobenius image of every p in T cuts out a cyclic degree-q
// subfield in which all of T splits. Its conductor divides prod ell_i, which
// is coprime to cond(F), so it meets F only in Q.

#include <cstdint>
#include <optional>
#include <vector>

#include "abelian/abelian_fields.hpp"

namespace abelian {

struct CyclicFieldRequest {
  u64 q;
  std::vector<u64> split_primes;
  AbelianField avoid;
  // Largest ell tried; falls back to Config::prime_search_bound when unset.
  std::optional<u64> search_bound;
};

struct FrobeniusVector {
  u64 prime;
  std::vector<u64> coordinates;  // in (Z/q)^{n+1}
  friend bool operator==(const FrobeniusVector&, const FrobeniusVector&) = default;
};

struct ConstructionTrace {
  u64 q;
  std::vector<u64> split_primes;  // sorted, deduplicated
  std::vector<u64> chosen_ells;   // ascending
  u64 modulus;                    // prod ell_i
  std::vector<FrobeniusVector> frobenius_vectors;
  std::vector<u64> character;     // chi, vanishing on every Frobenius vector
  AbelianField result;
};

/// First basis vector of the null space of `rows` (each of length `columns`)
/// over GF(q): reduced row echelon form, the first free column set to 1 and
/// the other free columns to 0. Requires a nontrivial null space.
std::vector<u64> first_null_vector(const std::vector<std::vector<u64>>& rows, std::size_t columns, u64 q);

/// Throws ValidationError for non-prime q or split primes, SearchExhausted
/// when fewer than |T| + 1 admissible ell lie below the search bound, and
/// InternalError if a postcondition (degree q, total splitting, trivial
/// intersection with the avoided field) fails.
ConstructionTrace construct_cyclic(const CyclicFieldRequest& request);

}  // namespace abelian
