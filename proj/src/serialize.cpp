#include "abelian/serialize.hpp"

#include <sstream>

#include "abelian/errors.hpp"

namespace abelian {

namespace {

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

bool non_negative(const json& v) {
  return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

}  // namespace

json to_json(const IntPolynomial& f) {
  json coeffs = json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(integer(c));
  return coeffs;
}

IntPolynomial polynomial_from_json(const json& coeffs) {
  if (!coeffs.is_array()) throw ValidationError("polynomial must be a coefficient array");
  std::vector<mpz_class> out;
  for (const auto& c : coeffs) {
    if (c.is_number_integer()) {
      out.emplace_back(c.get<long>());
    } else if (c.is_string()) {
      mpz_class v;
      if (v.set_str(c.get<std::string>(), 10) != 0) throw ValidationError("bad coefficient " + c.dump());
      out.push_back(v);
    } else {
      throw ValidationError("bad coefficient " + c.dump());
    }
  }
  return IntPolynomial(std::move(out));
}

json field_document(const AbelianField& field) {
  return json{{"conductor", field.conductor()},
              {"subgroup_generators", field.fixing_subgroup().generators()},
              {"degree", field.degree()},
              {"canonical", true}};
}

AbelianField parse_field_document(const json& doc, const Config& config) {
  if (!doc.is_object()) throw ValidationError("field document must be a JSON object");
  if (!doc.contains("conductor") || !non_negative(doc["conductor"])) {
    throw ValidationError("field document needs a positive integer 'conductor'");
  }
  std::vector<Residue> gens;
  if (doc.contains("subgroup_generators")) {
    const auto& g = doc["subgroup_generators"];
    if (!g.is_array()) throw ValidationError("'subgroup_generators' must be an array");
    for (const auto& x : g) {
      if (!non_negative(x)) throw ValidationError("subgroup generators must be non-negative integers");
      gens.push_back(x.get<Residue>());
    }
  }
  AbelianField field = fixed_field(doc["conductor"].get<u64>(), gens, config);
  if (doc.contains("degree")) {
    if (!non_negative(doc["degree"]) || doc["degree"].get<u64>() != field.degree()) {
      throw ValidationError("field document degree does not match its subgroup");
    }
  }
  return field;
}

json to_json(const SplittingData& s) {
  return json{{"prime", s.prime}, {"e", s.e}, {"f", s.f}, {"g", s.g}, {"local_degree", s.local_degree}};
}

json to_json(const ConstructionTrace& t) {
  json frob = json::array();
  for (const auto& w : t.frobenius_vectors) frob.push_back({{"prime", w.prime}, {"vector", w.coordinates}});
  return json{{"q", t.q},
              {"split_primes", t.split_primes},
              {"chosen_ells", t.chosen_ells},
              {"modulus", t.modulus},
              {"frobenius_vectors", frob},
              {"character", t.character},
              {"result", field_document(t.result)}};
}

json to_json(const std::vector<LambdaPrime>& primes) {
  json out = json::array();
  for (const auto& lp : primes) out.push_back({{"q", lp.q}, {"factors_of_q_minus_1", lp.factors}});
  return out;
}

json to_json(const RealizationReport& r) {
  json components = json::array();
  for (const auto& c : r.components) {
    json entry{{"label", {c.level, c.index}}, {"q", c.q}, {"degree", c.gamma}, {"field", field_document(c.field)}};
    if (c.trace) entry["trace"] = to_json(*c.trace);
    components.push_back(std::move(entry));
  }
  json table = json::array();
  for (const auto& s : r.local_degree_table) table.push_back(to_json(s));
  json bounds = json::array();
  for (const auto& b : r.claimed_bounds) {
    bounds.push_back({{"prime", b.prime}, {"bound", b.bound}, {"computed", b.computed}, {"holds", b.holds}});
  }
  json verdicts = json::object();
  for (const auto& v : r.verdicts) verdicts[v.name] = v.holds;
  const bool bounded = r.kind == RealizationKind::bounded;
  return json{{"kind", bounded ? "bounded" : "unbounded"},
              {"depth", r.depth},
              {"lambda_primes", r.lambda_primes},
              {"target_primes", r.target_primes},
              {"components", components},
              {"compositum", field_document(r.compositum)},
              {"local_degree_table", table},
              {"claimed_bounds", bounds},
              {"roots_of_unity", r.roots_of_unity},
              {"verdicts", verdicts},
              {"note", bounded ? "finite truncation; bounds are checked on the levels built"
                               : "finite truncation; unboundedness is witnessed by growth in the depth, not proven"}};
}

json to_json(const DedekindReport& r) {
  json factors = json::array();
  for (const auto& f : r.factors) {
    json coeffs = json::array();
    for (u64 c : f.factor.coefficients()) coeffs.push_back(c);
    factors.push_back({{"factor", coeffs}, {"multiplicity", f.multiplicity}});
  }
  json splitting = nullptr;
  if (r.splitting) {
    splitting = json::array();
    for (const auto& [e, f] : *r.splitting) splitting.push_back({{"e", e}, {"f", f}});
  }
  return json{{"polynomial", to_json(r.polynomial)},
              {"polynomial_text", r.polynomial.to_string()},
              {"prime", r.prime},
              {"factors", factors},
              {"index_divisible", r.index_divisible},
              {"splitting", splitting},
              {"irreducibility", r.irreducibility == IrreducibilityEvidence::proven ? "proven" : "probed"}};
}

json to_json(const MonogenicScan& s) {
  json entries = json::array();
  for (const auto& e : s.entries) {
    entries.push_back({{"label", e.label},
                       {"degree", e.report.polynomial.degree()},
                       {"refutes", e.refutes},
                       {"report", to_json(e.report)}});
  }
  return json{{"prime", s.prime},
              {"local_degree_bound", s.local_degree_bound},
              {"degree_bound", integer(s.degree_bound)},
              {"entries", entries},
              {"index_free_labels", s.index_free_labels()},
              {"refutation_count", s.refutation_count()}};
}

namespace {

void flatten(const json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    if (node.empty()) out << path << ": {}\n";
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    bool scalars = std::all_of(node.begin(), node.end(), [](const json& v) { return v.is_primitive(); });
    if (scalars) {
      out << path << ": " << node.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (node.is_string() ? node.get<std::string>() : node.dump()) << '\n';
  }
}

}  // namespace

std::string render_table(const json& doc) {
  std::ostringstream out;
  flatten(doc, "", out);
  return out.str();
}

}  // namespace abelian
