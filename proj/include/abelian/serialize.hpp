#pragma once

// JSON documents for every domain object. Objects use sorted keys, so a dump
// of the same value is byte-identical across runs.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "abelian/abelian_fields.hpp"
#include "abelian/dedekind.hpp"
#include "abelian/grunwald.hpp"
#include "abelian/realizations.hpp"

namespace abelian {

using nlohmann::json;

json field_document(const AbelianField& field);
/// Accepts {conductor, subgroup_generators[, degree, canonical]}; the result
/// is canonicalized. Throws ValidationError on malformed documents or a
/// degree that disagrees with the generators.
AbelianField parse_field_document(const json& doc, const Config& config = {});

json to_json(const SplittingData& s);
json to_json(const ConstructionTrace& t);
json to_json(const std::vector<LambdaPrime>& primes);
json to_json(const RealizationReport& r);
json to_json(const DedekindReport& r);
json to_json(const MonogenicScan& s);
json to_json(const IntPolynomial& f);

/// Coefficients given as JSON integers or decimal strings.
IntPolynomial polynomial_from_json(const json& coeffs);

/// One "path: value" line per leaf.
std::string render_table(const json& doc);

}  // namespace abelian
