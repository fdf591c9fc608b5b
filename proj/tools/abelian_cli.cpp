// Command-line front end. Every command prints one JSON document (or a
// flattened table) on stdout.
//
// Exit codes: 0 success, 2 validation error, 3 search exhausted,
// 4 cap exceeded, 1 anything else.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "abelian/abelian_fields.hpp"
#include "abelian/config.hpp"
#include "abelian/dedekind.hpp"
#include "abelian/errors.hpp"
#include "abelian/grunwald.hpp"
#include "abelian/realizations.hpp"
#include "abelian/serialize.hpp"

namespace {

using namespace abelian;

std::vector<u64> parse_list(const std::string& text, const char* what) {
  std::vector<u64> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.front() == '-') {
      throw ValidationError(std::string("invalid ") + what + " entry '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

json read_json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return json::parse(arg);
    std::ifstream file(arg);
    if (!file) throw ValidationError("cannot open '" + arg + "'");
    return json::parse(file);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const json& doc, const Config& config) {
  if (config.output_format == OutputFormat::table) {
    std::cout << render_table(doc);
  } else {
    std::cout << doc.dump(2) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian fields of Q: local degrees, explicit cyclic constructions and Dedekind's criterion"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<u64> seed, modulus_cap, enumeration_cap, search_bound, degree_cap;
  std::optional<std::string> format;
  app.add_option("--seed", seed, "Seed for randomized internals (default 0)");
  app.add_option("--format", format, "Output format: json or table");
  app.add_option("--modulus-cap", modulus_cap, "Largest prime-power factor of any modulus");
  app.add_option("--subgroup-enumeration-cap", enumeration_cap, "Largest subgroup to enumerate");
  app.add_option("--prime-search-bound", search_bound, "Largest prime tried by constructions");
  app.add_option("--period-degree-cap", degree_cap, "Largest degree for period polynomials");

  auto* lambda_cmd = app.add_subcommand("lambda", "Primes q with q - 1 squarefree");
  std::size_t count = 0;
  lambda_cmd->add_option("--count", count, "How many")->required();

  auto* local_cmd = app.add_subcommand("local-degree", "Splitting data of a prime in an abelian field");
  u64 conductor = 0, prime = 0;
  std::string subgroup_text;
  local_cmd->add_option("--conductor", conductor, "Modulus m of Q(zeta_m)")->required();
  local_cmd->add_option("--subgroup", subgroup_text, "Comma-separated generators of H in (Z/m)*");
  local_cmd->add_option("--prime", prime, "Rational prime")->required();

  auto* cyclic_cmd = app.add_subcommand("construct-cyclic", "Cyclic degree-q field with prescribed split primes");
  u64 q = 0;
  std::string split_text, avoid_text;
  std::optional<u64> cyclic_bound;
  cyclic_cmd->add_option("--q", q, "Prime degree")->required();
  cyclic_cmd->add_option("--split", split_text, "Comma-separated primes that must split totally");
  cyclic_cmd->add_option("--avoid", avoid_text, "Field document (inline JSON or file) to stay disjoint from");
  cyclic_cmd->add_option("--search-bound", cyclic_bound, "Largest prime ell tried");

  auto* realize_cmd = app.add_subcommand("realize", "Truncated bounded/unbounded realization");
  std::string kind, primes_text, probe_text;
  unsigned depth = 0;
  realize_cmd->add_option("--kind", kind, "bounded or unbounded")->required()->check(CLI::IsMember({"bounded", "unbounded"}));
  realize_cmd->add_option("--depth", depth, "Number of Lambda primes")->required();
  realize_cmd->add_option("--primes", primes_text, "Target primes p_1,...,p_k (bounded; default first k primes)");
  realize_cmd->add_option("--probe", probe_text, "Extra primes at which to report local degrees");

  auto* dedekind_cmd = app.add_subcommand("dedekind", "Dedekind index criterion");
  std::string poly_text, family_path;
  u64 bound_b = 1;
  dedekind_cmd->add_option("--poly", poly_text, "Ascending coefficients c0,c1,...,1");
  dedekind_cmd->add_option("--family", family_path, "JSON file [{label, poly}] scanned against the degree bound");
  dedekind_cmd->add_option("--prime", prime, "Prime p")->required();
  dedekind_cmd->add_option("--bound", bound_b, "Local degree bound B for --family scans");

  auto* eis_cmd = app.add_subcommand("eisenstein-disc", "Discriminant of x^3 - 2p x + p");
  u64 eis_p = 0;
  eis_cmd->add_option("--p", eis_p, "Prime p")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config config;
    config.apply_environment();
    if (seed) config.seed = *seed;
    if (format) config.output_format = parse_output_format(*format);
    if (modulus_cap) config.modulus_cap = *modulus_cap;
    if (enumeration_cap) config.subgroup_enumeration_cap = *enumeration_cap;
    if (search_bound) config.prime_search_bound = *search_bound;
    if (degree_cap) config.period_degree_cap = static_cast<unsigned>(*degree_cap);
    config.validate();

    if (lambda_cmd->parsed()) {
      emit(to_json(lambda_primes(count)), config);
    } else if (local_cmd->parsed()) {
      const auto gens = parse_list(subgroup_text, "subgroup generator");
      const AbelianField field = fixed_field(conductor, gens, config);
      emit(to_json(splitting_data(field, prime)), config);
    } else if (cyclic_cmd->parsed()) {
      const AbelianField avoid = avoid_text.empty() ? rationals(config)
                                                    : parse_field_document(read_json_argument(avoid_text), config);
      const auto trace = construct_cyclic({q, parse_list(split_text, "split prime"), avoid, cyclic_bound});
      emit(json{{"field", field_document(trace.result)}, {"trace", to_json(trace)}}, config);
    } else if (realize_cmd->parsed()) {
      const auto probes = parse_list(probe_text, "probe prime");
      if (kind == "unbounded") {
        emit(to_json(unbounded_realization(depth, probes.empty() ? std::vector<u64>{2} : probes, config)), config);
      } else {
        std::vector<u64> targets = parse_list(primes_text, "target prime");
        if (targets.empty()) {
          for (u64 p = 2; targets.size() < depth; p = next_prime(p)) targets.push_back(p);
        }
        emit(to_json(bounded_realization(depth, targets, probes, config)), config);
      }
    } else if (dedekind_cmd->parsed()) {
      if (poly_text.empty() == family_path.empty()) {
        throw ValidationError("give exactly one of --poly or --family");
      }
      if (!poly_text.empty()) {
        emit(to_json(dedekind_index_test(IntPolynomial::parse(poly_text), prime, config.seed)), config);
      } else {
        const json doc = read_json_argument(family_path);
        if (!doc.is_array()) throw ValidationError("family must be a JSON array");
        std::vector<std::pair<std::string, IntPolynomial>> family;
        for (const auto& item : doc) {
          if (!item.is_object() || !item.contains("poly")) throw ValidationError("family entries need 'poly'");
          family.emplace_back(item.value("label", std::string{}), polynomial_from_json(item["poly"]));
        }
        emit(to_json(monogenic_scan(family, prime, bound_b, config.seed)), config);
      }
    } else if (eis_cmd->parsed()) {
      if (!is_prime(eis_p)) throw ValidationError(std::to_string(eis_p) + " is not prime");
      const IntPolynomial f = eisenstein_cubic(eis_p);
      const mpz_class disc = discriminant(f);
      const mpz_class mp(static_cast<unsigned long>(eis_p));
      const mpz_class cofactor = 32 * mp - 27;
      emit(json{{"p", eis_p},
                {"poly", f.to_string()},
                {"coefficients", to_json(f)},
                {"eisenstein", is_eisenstein(f, eis_p)},
                {"discriminant", disc.fits_slong_p() ? json(disc.get_si()) : json(disc.get_str())},
                {"factorization", std::to_string(eis_p) + "^2*" + cofactor.get_str()},
                {"matches_closed_form", disc == mp * mp * cofactor}},
           config);
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const SearchExhausted& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
