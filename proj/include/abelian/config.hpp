#pragma once

#include <cstdint>
#include <string>

namespace abelian {

enum class OutputFormat { json, table };

/// Caps and knobs shared by every module. Library entry points take a
/// `const Config&` and only read the fields relevant to them.
struct Config {
  // Bound on every prime-power factor p^a of a modulus.
  std::uint64_t modulus_cap = 10'000'000;
  std::uint64_t subgroup_enumeration_cap = 1'000'000;
  std::uint64_t prime_search_bound = 1'000'000;
  unsigned period_degree_cap = 24;
  std::uint64_t seed = 0;
  OutputFormat output_format = OutputFormat::json;

  /// Overrides fields from MODULUS_CAP, SUBGROUP_ENUMERATION_CAP,
  /// PRIME_SEARCH_BOUND, PERIOD_DEGREE_CAP, SEED and OUTPUT_FORMAT.
  /// Throws ValidationError on unparsable or non-positive values.
  void apply_environment();

  void validate() const;
};

OutputFormat parse_output_format(const std::string& text);

}  // namespace abelian
