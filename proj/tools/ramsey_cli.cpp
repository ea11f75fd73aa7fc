// ramsey: construct and verify explicit Ramsey graphs from the command line.
//
// Exit codes, uniform across subcommands:
//   0  success / property verified
//   1  usage, parse, parameter-selection or capacity error
//   2  semantic failure: verification failed, search exhausted, or the
//      requested parameters cannot certify a result
//
// All JSON goes to stdout; diagnostics go to stderr. Output is byte-identical
// across runs for identical flags.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramsey/construct.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/sample_space.hpp"
#include "ramsey/search.hpp"
#include "ramsey/serialize.hpp"
#include "ramsey/version.hpp"

namespace {

using namespace ramsey;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

struct CommonGraphOut {
  std::string output;
  std::string format = "adjacency-bits";
};

void write_output(const Graph& g, const CommonGraphOut& out) {
  write_graph_file(out.output, g, format_from_name(out.format));
}

int cmd_construct(std::uint64_t n, double epsilon, const ConstructOptions& opts,
                  const CommonGraphOut& out) {
  Format fmt = format_from_name(out.format);  // fail before the pipeline runs
  ConstructionResult res = construct_ramsey(n, epsilon, opts);
  write_output(res.graph, out);
  std::cout << provenance_json(res, fmt) << "\n";
  if (res.final_report && !res.final_report->passed) return kExitFailed;
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& format, int bound,
               const std::string& mode) {
  Graph g = read_graph_file(input, format_from_name(format));
  VerificationReport r =
      verify_bounds(g, bound, mode == "exact" ? VerifyMode::exact : VerifyMode::decision);
  std::cout << to_json(r) << "\n";
  return r.passed ? kExitOk : kExitFailed;
}

int cmd_product(const std::string& left, const std::string& right, const std::string& format,
                const CommonGraphOut& out) {
  Format f = format_from_name(format);
  Graph a = read_graph_file(left, f);
  Graph b = read_graph_file(right, f);
  write_output(abbott_product(a, b), out);
  return kExitOk;
}

int cmd_power(const std::string& input, int l, const std::string& format,
              const CommonGraphOut& out) {
  Format f = format_from_name(format);
  Graph g = read_graph_file(input, f);
  write_output(abbott_power(g, l), out);
  return kExitOk;
}

int cmd_base_graph(int k, std::optional<int> bound_flag, const std::string& method,
                   std::optional<std::uint64_t> cap, int relaxed_r, bool faithful,
                   std::uint64_t prng_seed, int threads, const CommonGraphOut& out) {
  int bound = bound_flag ? *bound_flag : default_base_bound(k);
  SearchOutcome outcome;
  if (method == "enumeration") {
    SampleSpaceSpec spec = faithful ? derive_spec(k) : relaxed_spec(k, relaxed_r);
    outcome = search_base_graph(k, bound, spec, cap ? *cap : kDefaultSeedCap, threads);
  } else if (method == "conditional-expectations") {
    outcome = conditional_expectations_base_graph(k, bound);
  } else if (method == "prng-fallback") {
    outcome = prng_base_graph(k, bound, prng_seed, cap ? *cap : 1024);
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }
  write_output(outcome.graph, out);
  std::cout << to_json(outcome) << "\n";
  return kExitOk;
}

int cmd_bias(int k, std::optional<int> m_flag, int r, const std::string& subset_csv,
             bool all_subsets, bool uniform) {
  SampleSpaceSpec spec;
  if (uniform) {
    std::uint64_t m = m_flag ? static_cast<std::uint64_t>(*m_flag)
                             : edge_slot_count(static_cast<std::uint64_t>(k));
    spec = uniform_spec(m);
  } else if (m_flag) {
    spec = relaxed_spec_for_length(static_cast<std::uint64_t>(*m_flag), r);
  } else {
    spec = relaxed_spec(k, r);
  }
  nlohmann::json j;
  j["spec"] = nlohmann::json::parse(to_json(spec));
  j["epsilon_bound"] = spec.epsilon_bias();
  if (all_subsets) {
    BiasSweep sweep = measure_bias_all(spec);
    j["max_bias"] = sweep.max_bias;
    j["worst_subset"] = sweep.worst_subset;
    j["within_bound"] = sweep.max_bias <= spec.epsilon_bias() ||
                        spec.kind == SpaceKind::uniform;
  } else {
    std::vector<std::uint64_t> positions;
    std::size_t pos = 0;
    while (pos < subset_csv.size()) {
      std::size_t comma = subset_csv.find(',', pos);
      if (comma == std::string::npos) comma = subset_csv.size();
      positions.push_back(std::stoull(subset_csv.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    double bias = measure_bias(spec, positions);
    j["bias"] = bias;
    j["subset"] = positions;
    j["within_bound"] = bias <= spec.epsilon_bias() || spec.kind == SpaceKind::uniform;
  }
  std::cout << j.dump() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit Ramsey graph construction via base-graph search and graph powers"};
  app.set_version_flag("--version", std::string(ramsey::kVersion));
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build an n-vertex graph end to end");
  std::uint64_t n = 0;
  double epsilon = 0.5;
  ConstructOptions copts;
  copts.threads = default_threads();
  CommonGraphOut cout_construct;
  int c_relaxed_r = kDefaultRelaxedDegree;
  std::string c_method = "enumeration";
  std::string c_verify = "decision";
  std::uint64_t c_cap = 0;
  int c_k = 0, c_l = 0, c_bound = 0;
  construct->add_option("--n", n, "target vertex count (>= 16)")->required();
  construct->add_option("--epsilon", epsilon, "target exponent constant (default 0.5)");
  construct->add_option("--k", c_k, "override base-graph order");
  construct->add_option("--l", c_l, "override power exponent");
  construct->add_option("--base-bound", c_bound, "override base-graph bound");
  construct->add_option("--method", c_method,
                        "enumeration | conditional-expectations | prng-fallback");
  construct->add_option("--relaxed-r", c_relaxed_r, "field degree of the relaxed seed space");
  construct->add_flag("--faithful-space", copts.faithful_space,
                      "search the faithful (huge) sample space instead of the relaxed one");
  construct->add_option("--cap", c_cap, "seed/attempt cap for the base-graph search");
  construct->add_option("--prng-seed", copts.prng_seed, "seed for --method prng-fallback");
  construct->add_option("--verify", c_verify, "none | decision | exact (default decision)");
  construct->add_option("--threads", copts.threads, "worker threads for seed enumeration");
  construct->add_option("--format", cout_construct.format, "adjacency-bits | dimacs | json");
  construct->add_option("--output", cout_construct.output, "graph output path")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check omega, alpha < bound for a graph file");
  std::string v_input, v_format = "adjacency-bits", v_mode = "exact";
  int v_bound = 0;
  verify->add_option("--input", v_input, "graph file")->required();
  verify->add_option("--format", v_format, "adjacency-bits | dimacs | json");
  verify->add_option("--bound", v_bound, "strict bound to test")->required();
  verify->add_option("--mode", v_mode, "exact | decision (default exact)");

  // product / power
  auto* product = app.add_subcommand("product", "graph product of two graph files");
  std::string p_left, p_right, p_format = "adjacency-bits";
  CommonGraphOut cout_product;
  product->add_option("left", p_left, "left factor")->required();
  product->add_option("right", p_right, "right factor")->required();
  product->add_option("--format", p_format, "input/output format");
  product->add_option("--output", cout_product.output, "graph output path")->required();

  auto* power = app.add_subcommand("power", "iterated graph product of a file with itself");
  std::string w_input, w_format = "adjacency-bits";
  int w_l = 0;
  CommonGraphOut cout_power;
  power->add_option("input", w_input, "base graph file")->required();
  power->add_option("--l", w_l, "exponent (>= 1)")->required();
  power->add_option("--format", w_format, "input/output format");
  power->add_option("--output", cout_power.output, "graph output path")->required();

  // base-graph
  auto* base = app.add_subcommand("base-graph", "search a small graph with omega, alpha < bound");
  int b_k = 0, b_relaxed_r = kDefaultRelaxedDegree, b_threads = default_threads();
  std::optional<int> b_bound;
  std::optional<std::uint64_t> b_cap;
  std::string b_method = "enumeration";
  bool b_faithful = false;
  std::uint64_t b_prng_seed = 0;
  CommonGraphOut cout_base;
  base->add_option("--k", b_k, "vertex count")->required();
  base->add_option("--bound", b_bound, "strict bound (default 3*ceil(log2 k))");
  base->add_option("--method", b_method, "enumeration | conditional-expectations | prng-fallback");
  base->add_option("--cap", b_cap, "seed/attempt cap");
  base->add_option("--relaxed-r", b_relaxed_r, "field degree of the relaxed seed space");
  base->add_flag("--faithful-space", b_faithful, "use the faithful sample space");
  base->add_option("--prng-seed", b_prng_seed, "seed for prng-fallback");
  base->add_option("--threads", b_threads, "worker threads");
  base->add_option("--format", cout_base.format, "output format");
  base->add_option("--output", cout_base.output, "graph output path")->required();

  // bias
  auto* bias = app.add_subcommand("bias", "measure subset parities of a tiny sample space");
  int s_k = 5, s_r = 8;
  std::optional<int> s_m;
  std::string s_subset;
  bool s_all = false, s_uniform = false;
  bias->add_option("--k", s_k, "derive m = C(k,2) from a base-graph order (default 5)");
  bias->add_option("--m", s_m, "explicit output length (overrides --k)");
  bias->add_option("--r", s_r, "field degree (default 8)");
  bias->add_option("--subset", s_subset, "comma-separated positions, e.g. 0,3,7");
  bias->add_flag("--all-subsets", s_all, "sweep every nonempty subset");
  bias->add_flag("--uniform", s_uniform, "measure the uniform baseline space instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "ramsey: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct) {
      if (c_k > 0) copts.k = c_k;
      if (c_l > 0) copts.l = c_l;
      if (c_bound > 0) copts.base_bound = c_bound;
      if (c_cap > 0) copts.cap = c_cap;
      copts.relaxed_r = c_relaxed_r;
      copts.method = method_from_name(c_method);
      if (c_verify == "none")
        copts.verify = std::nullopt;
      else if (c_verify == "decision")
        copts.verify = VerifyMode::decision;
      else if (c_verify == "exact")
        copts.verify = VerifyMode::exact;
      else
        throw std::invalid_argument("unknown verify mode: " + c_verify);
      return cmd_construct(n, epsilon, copts, cout_construct);
    }
    if (*verify) {
      if (v_mode != "exact" && v_mode != "decision")
        throw std::invalid_argument("unknown verify mode: " + v_mode);
      return cmd_verify(v_input, v_format, v_bound, v_mode);
    }
    if (*product) {
      cout_product.format = p_format;
      return cmd_product(p_left, p_right, p_format, cout_product);
    }
    if (*power) {
      cout_power.format = w_format;
      return cmd_power(w_input, w_l, w_format, cout_power);
    }
    if (*base)
      return cmd_base_graph(b_k, b_bound, b_method, b_cap, b_relaxed_r, b_faithful, b_prng_seed,
                            b_threads, cout_base);
    if (*bias) {
      if (!s_all && s_subset.empty())
        throw std::invalid_argument("bias needs --subset or --all-subsets");
      return cmd_bias(s_k, s_m, s_r, s_subset, s_all, s_uniform);
    }
  } catch (const SearchExhausted& e) {
    std::cerr << "ramsey: search exhausted: " << e.what() << "\n";
    return kExitFailed;
  } catch (const ParameterError& e) {
    std::cerr << "ramsey: infeasible parameters: " << e.what() << "\n";
    return kExitFailed;
  } catch (const ParseError& e) {
    std::cerr << "ramsey: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "ramsey: capacity: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ramsey: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "ramsey: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "ramsey: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
