// Acceptance suite: one binary, one pass/fail line per criterion.
//
//   usage: ramsey_acceptance [criterion-number ...]
//
// Criterion 9 drives the CLI binary; point RAMSEY_CLI at it (CTest does).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/abbott.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/sample_space.hpp"
#include "ramsey/search.hpp"
#include "ramsey/serialize.hpp"
#include "support/oracle.hpp"

using namespace ramsey;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

// ---- criterion 1: omega/alpha multiplicativity against the oracle ----
void criterion_multiplicativity() {
  int pairs = 0;
  for (std::uint64_t seed = 0; pairs < 200; ++seed) {
    int ng = 2 + static_cast<int>(seed % 7);        // orders 2..8
    int nh = 2 + static_cast<int>((seed * 11) % 7);
    double pg = 0.25 + 0.5 * static_cast<double>(seed % 5) / 4.0;
    Graph g = oracle::random_graph(ng, seed * 2 + 1, pg);
    Graph h = oracle::random_graph(nh, seed * 2 + 2, 1.0 - pg);
    int wg = max_clique(g).size, wh = max_clique(h).size;
    int ag = max_independent_set(g).size, ah = max_independent_set(h).size;
    require(wg == oracle::max_clique_subsets(g), "solver/oracle mismatch on g");
    require(wh == oracle::max_clique_subsets(h), "solver/oracle mismatch on h");
    require(ag == oracle::max_independent_subsets(g), "solver/oracle alpha mismatch on g");
    require(ah == oracle::max_independent_subsets(h), "solver/oracle alpha mismatch on h");
    Graph p = abbott_product(g, h);
    require(max_clique(p).size == wg * wh, "omega not multiplicative");
    require(max_independent_set(p).size == ag * ah, "alpha not multiplicative");
    ++pairs;
  }
}

// ---- criterion 2: solver equals all-subsets enumeration ----
void criterion_solver_oracle() {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    int n = 1 + static_cast<int>(seed % 10);
    double p = 0.15 + 0.7 * static_cast<double>(seed % 8) / 7.0;
    Graph g = oracle::random_graph(n, seed * 7 + 3, p);
    require(max_clique(g).size == oracle::max_clique_subsets(g), "omega mismatch");
    require(max_independent_set(g).size == oracle::max_independent_subsets(g),
            "alpha mismatch");
  }
}

// ---- criterion 3: known values with independent brute force ----
void criterion_known_values() {
  Graph paley = oracle::paley_graph(17);
  require(oracle::has_clique_combinations(paley, 3), "Paley-17 should contain a triangle");
  require(!oracle::has_clique_combinations(paley, 4), "Paley-17 should have no 4-clique");
  require(oracle::has_independent_combinations(paley, 3), "Paley-17 needs a 3-independent set");
  require(!oracle::has_independent_combinations(paley, 4),
          "Paley-17 should have no 4-independent set");
  require(max_clique(paley).size == 3, "solver omega(Paley-17) != 3");
  require(max_independent_set(paley).size == 3, "solver alpha(Paley-17) != 3");

  Graph c5 = cycle_graph(5);
  require(oracle::max_clique_subsets(c5) == 2, "omega(C5) != 2");
  require(oracle::max_independent_subsets(c5) == 2, "alpha(C5) != 2");
  require(max_clique(c5).size == 2 && max_independent_set(c5).size == 2, "solver on C5");

  Graph sq = abbott_power(c5, 2);
  require(oracle::has_clique_combinations(sq, 4), "C5^2 needs a 4-clique");
  require(!oracle::has_clique_combinations(sq, 5), "C5^2 should have no 5-clique");
  require(oracle::has_independent_combinations(sq, 4), "C5^2 needs a 4-independent set");
  require(!oracle::has_independent_combinations(sq, 5), "C5^2 should have no 5-independent set");
  require(max_clique(sq).size == 4 && max_independent_set(sq).size == 4, "solver on C5^2");
}

// ---- criterion 4: end-to-end base-graph search, exact re-verification ----
void criterion_search_end_to_end() {
  SearchOutcome o16 = search_base_graph(16, 12, relaxed_spec(16), 10000);
  require(o16.report.passed, "k=16 search did not pass");
  VerificationReport e16 = verify_bounds(o16.graph, 12, VerifyMode::exact);
  require(e16.passed, "k=16 exact re-verification failed");
  require(e16.omega < 12 && e16.alpha < 12, "k=16 bounds not strict");

  SearchOutcome o32 = search_base_graph(32, 15, relaxed_spec(32), 10000);
  require(o32.report.passed, "k=32 search did not pass");
  VerificationReport e32 = verify_bounds(o32.graph, 15, VerifyMode::exact);
  require(e32.passed, "k=32 exact re-verification failed");
}

// ---- criterion 5: conditional expectations with a monotone estimator ----
void criterion_conditional_expectations() {
  EstimatorTrace trace;
  SearchOutcome out = conditional_expectations_base_graph(16, 12, &trace);
  require(trace.after_step.size() == 120, "expected one estimator value per edge slot");
  double prev = trace.initial;
  for (std::size_t i = 0; i < trace.after_step.size(); ++i) {
    require(trace.after_step[i] <= prev + 1e-12,
            "estimator increased at step " + std::to_string(i));
    prev = trace.after_step[i];
  }
  // zero monochromatic 12-subsets, checked by direct enumeration
  require(!oracle::has_clique_combinations(out.graph, 12), "12-clique survived");
  require(!oracle::has_independent_combinations(out.graph, 12), "12-independent set survived");
  VerificationReport exact = verify_bounds(out.graph, 12, VerifyMode::exact);
  require(exact.passed, "exact re-verification failed");
}

// ---- criterion 6: impossibility guards ----
void criterion_impossibility() {
  bool exhausted = false;
  try {
    search_base_graph(8, 2, relaxed_spec(8), 500);
  } catch (const SearchExhausted&) {
    exhausted = true;
  }
  require(exhausted, "k=8, bound=2 search must exhaust");

  require(conditional_estimator_initial(6, 3) == 5.0, "initial estimator at (6,3) must be 5");
  bool rejected = false;
  try {
    conditional_expectations_base_graph(6, 3);
  } catch (const ParameterError&) {
    rejected = true;
  }
  require(rejected, "k=6, bound=3 conditional expectations must reject");
}

// ---- criterion 7: full pipeline with exact product verification ----
void criterion_full_pipeline() {
  ConstructOptions opt;
  opt.k = 16;
  opt.l = 2;
  opt.cap = 10000;
  ConstructionResult full = construct_ramsey(256, 0.5, opt);
  require(full.graph.order() == 256, "output must have exactly 256 vertices");
  Graph base = full.outcome.graph;
  int wg = max_clique(base).size;
  int ag = max_independent_set(base).size;
  int wh = max_clique(full.graph).size;
  int ah = max_independent_set(full.graph).size;
  require(wh == wg * wg, "omega(H) != omega(G)^2");
  require(ah == ag * ag, "alpha(H) != alpha(G)^2");

  ConstructionResult cut = construct_ramsey(200, 0.5, opt);
  require(cut.graph.order() == 200, "truncation must output 200 vertices");
  require(max_clique(cut.graph).size <= wh, "truncation increased omega");
  require(max_independent_set(cut.graph).size <= ah, "truncation increased alpha");
}

// ---- criterion 8: exhaustive small-bias check ----
void criterion_small_bias() {
  SampleSpaceSpec tiny = relaxed_spec(5, 8);  // m = 10, seed_bits = 16
  require(tiny.m == 10 && tiny.seed_bits == 16, "tiny spec shape changed");
  BiasSweep sweep = measure_bias_all(tiny);
  require(sweep.max_bias <= tiny.epsilon_bias(),
          "bias " + std::to_string(sweep.max_bias) + " exceeds epsilon " +
              std::to_string(tiny.epsilon_bias()));
  BiasSweep uniform = measure_bias_all(uniform_spec(10));
  require(uniform.max_bias == 0.0, "uniform baseline must have zero bias");
}

// ---- criterion 9: CLI determinism and serialization round trips ----
void criterion_determinism() {
  const char* cli = std::getenv("RAMSEY_CLI");
  require(cli != nullptr, "RAMSEY_CLI must point at the CLI binary");
  fs::path dir = fs::temp_directory_path() / "ramsey_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  std::string flags = " construct --n 256 --epsilon 0.5 --k 16 --l 2 --cap 10000 --output ";
  fs::path g1 = dir / "a.bits", g2 = dir / "b.bits";
  fs::path o1 = dir / "a.json", o2 = dir / "b.json";
  int rc1 = std::system((std::string(cli) + flags + g1.string() + " > " + o1.string()).c_str());
  int rc2 = std::system((std::string(cli) + flags + g2.string() + " > " + o2.string()).c_str());
  require(WEXITSTATUS(rc1) == 0 && WEXITSTATUS(rc2) == 0, "cli construct failed");
  require(slurp(g1) == slurp(g2), "graph files differ between identical runs");
  require(slurp(o1) == slurp(o2), "provenance differs between identical runs");
  require(!slurp(g1).empty(), "graph file empty");

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int n = 1 + static_cast<int>(seed % 40);
    Graph g = oracle::random_graph(n, seed * 131 + 7);
    for (Format f : {Format::adjacency_bits, Format::dimacs, Format::json})
      require(decode(encode(g, f), f) == g, "round trip broke");
  }
}

// ---- criterion 10: honest finite-n bound report ----
void criterion_bound_report() {
  ConstructionParams p = select_params(256, 0.5);
  p.k = 16;
  p.l = 2;
  p.base_bound = 12;
  p.final_bound = 144;
  p.sharp_bound = 121;
  BoundCheck b = guaranteed_bound(p);
  require(b.guaranteed == 144, "guaranteed bound must be 144");
  require(b.target == 19, "target bound must be 19");
  require(!b.binding, "the asymptotic guarantee must be reported as not yet binding");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void()> fn;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "multiplicativity oracle suite (200 pairs, orders <= 8)", criterion_multiplicativity},
      {2, "solver oracle equivalence (500 graphs, order <= 10)", criterion_solver_oracle},
      {3, "known values: Paley-17, C5, C5^2", criterion_known_values},
      {4, "base-graph search end-to-end (k=16 and k=32)", criterion_search_end_to_end},
      {5, "conditional expectations at k=16 with monotone estimator",
       criterion_conditional_expectations},
      {6, "impossibility guards (k=8 b=2 search; k=6 b=3 estimator = 5)",
       criterion_impossibility},
      {7, "full pipeline n=256: exact product verification and truncation",
       criterion_full_pipeline},
      {8, "exhaustive small-bias check (m=10, 2^16 seeds, all subsets)", criterion_small_bias},
      {9, "determinism and serialization round trips", criterion_determinism},
      {10, "finite-n bound report: 144 vs 19, not binding", criterion_bound_report},
  };

  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    std::string verdict = "PASS";
    std::string detail;
    try {
      c.fn();
    } catch (const Failure& f) {
      verdict = "FAIL";
      detail = f.what;
      ++failed;
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = e.what();
      ++failed;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::cout << "[" << verdict << "] criterion " << c.id << ": " << c.name << " ("
              << ms << " ms)";
    if (!detail.empty()) std::cout << " - " << detail;
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
