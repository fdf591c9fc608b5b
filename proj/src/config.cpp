#include "abelian/config.hpp"

#include <charconv>
#include <cstdlib>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

std::uint64_t parse_u64(const char* name, const char* text) {
  std::uint64_t value = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError(std::string("environment variable ") + name + " is not an unsigned integer");
  }
  return value;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::json;
  if (text == "table") return OutputFormat::table;
  throw ValidationError("output format must be json or table, got '" + text + "'");
}

void Config::apply_environment() {
  if (const char* v = std::getenv("MODULUS_CAP")) modulus_cap = parse_u64("MODULUS_CAP", v);
  if (const char* v = std::getenv("SUBGROUP_ENUMERATION_CAP")) {
    subgroup_enumeration_cap = parse_u64("SUBGROUP_ENUMERATION_CAP", v);
  }
  if (const char* v = std::getenv("PRIME_SEARCH_BOUND")) prime_search_bound = parse_u64("PRIME_SEARCH_BOUND", v);
  if (const char* v = std::getenv("PERIOD_DEGREE_CAP")) {
    period_degree_cap = static_cast<unsigned>(parse_u64("PERIOD_DEGREE_CAP", v));
  }
  if (const char* v = std::getenv("SEED")) seed = parse_u64("SEED", v);
  if (const char* v = std::getenv("OUTPUT_FORMAT")) output_format = parse_output_format(v);
  validate();
}

void Config::validate() const {
  if (modulus_cap == 0 || subgroup_enumeration_cap == 0 || prime_search_bound == 0 || period_degree_cap == 0) {
    throw ValidationError("all caps must be positive");
  }
}

}  // namespace abelian
