#include "ramsey/json_io.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ramsey/gf2.hpp"
#include "ramsey/version.hpp"

namespace ramsey {

namespace {

using nlohmann::json;

json witness_json(const CliqueWitness& w) {
  json a = json::array();
  for (int v : w.vertices) a.push_back(v);
  return a;
}

json report_json(const VerificationReport& r) {
  return json{{"omega", r.omega},
              {"alpha", r.alpha},
              {"omega_witness", witness_json(r.omega_witness)},
              {"alpha_witness", witness_json(r.alpha_witness)},
              {"bound", r.bound},
              {"passed", r.passed},
              {"exact", r.exact}};
}

json spec_json(const SampleSpaceSpec& s) {
  json j{{"kind", s.kind == SpaceKind::uniform ? "uniform" : "powering"},
         {"m", s.m},
         {"t", s.t},
         {"delta_log2", s.delta_log2},
         {"r", s.r},
         {"seed_bits", s.seed_bits}};
  if (s.k > 0) j["k"] = s.k;
  if (s.kind == SpaceKind::powering && s.r >= 2 && s.r <= gf2::kMaxFieldDegree)
    j["polynomial"] = gf2::irreducible_modulus(s.r).to_string();
  return j;
}

json outcome_json(const SearchOutcome& o) {
  json j{{"method", std::string(method_name(o.method))},
         {"seeds_tried", o.seeds_tried},
         {"k", o.graph.order()},
         {"report", report_json(o.report)}};
  j["seed"] = o.seed ? json(o.seed->to_hex()) : json(nullptr);
  return j;
}

json params_json(const ConstructionParams& p) {
  return json{{"n", p.n},
              {"epsilon", p.epsilon},
              {"c", p.c},
              {"k", p.k},
              {"l", p.l},
              {"base_bound", p.base_bound},
              {"final_bound", p.final_bound},
              {"sharp_bound", p.sharp_bound},
              {"target_bound", p.target_bound},
              {"target_bound_log2", p.target_bound_log2}};
}

}  // namespace

std::string_view method_name(SearchMethod m) {
  switch (m) {
    case SearchMethod::enumeration: return "enumeration";
    case SearchMethod::conditional_expectations: return "conditional-expectations";
    case SearchMethod::prng_fallback: return "prng-fallback";
  }
  return "?";
}

SearchMethod method_from_name(std::string_view name) {
  if (name == "enumeration") return SearchMethod::enumeration;
  if (name == "conditional-expectations") return SearchMethod::conditional_expectations;
  if (name == "prng-fallback") return SearchMethod::prng_fallback;
  throw std::invalid_argument("unknown method: " + std::string(name));
}

std::string to_json(const VerificationReport& r) { return report_json(r).dump(); }
std::string to_json(const SampleSpaceSpec& s) { return spec_json(s).dump(); }
std::string to_json(const SearchOutcome& o) { return outcome_json(o).dump(); }
std::string to_json(const ConstructionParams& p) { return params_json(p).dump(); }

std::string provenance_json(const ConstructionResult& result, Format output_format) {
  BoundCheck bc = guaranteed_bound(result.params);
  json j{{"tool", "ramsey"},
         {"version", std::string(kVersion)},
         {"params", params_json(result.params)},
         {"bound_check",
          json{{"guaranteed", bc.guaranteed},
               {"sharp", bc.sharp},
               {"target", bc.target},
               {"target_log2", bc.target_log2},
               {"binding", bc.binding}}},
         {"base", outcome_json(result.outcome)},
         {"truncated", result.truncated},
         {"order", result.graph.order()},
         {"format", std::string(format_name(output_format))}};
  j["space"] = result.space ? spec_json(*result.space) : json(nullptr);
  j["verification"] = result.final_report ? report_json(*result.final_report) : json(nullptr);
  return j.dump();
}

}  // namespace ramsey
