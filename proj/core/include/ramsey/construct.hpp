#ifndef RAMSEY_CONSTRUCT_HPP
#define RAMSEY_CONSTRUCT_HPP

#include <cstdint>
#include <optional>

#include "ramsey/abbott.hpp"
#include "ramsey/extremal.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

/// Resolved parameters of a construction run. All logarithms are base 2.
///
/// The guarantee chain: the base graph G on k vertices satisfies
/// omega(G), alpha(G) < base_bound, hence <= base_bound - 1; both invariants
/// are multiplicative under the graph power, and induced subgraphs cannot
/// increase either, so the n-vertex output H satisfies
/// omega(H), alpha(H) <= (base_bound - 1)^l < final_bound.
struct ConstructionParams {
  std::uint64_t n = 0;
  double epsilon = 0.0;
  int c = 0;                      ///< smallest integer >= 2 with (log2 c + 2)/(2c) < epsilon
  int k = 0;                      ///< base-graph order, k^l >= n
  int l = 1;                      ///< power exponent, max(1, ceil(sqrt(log2 n)/c))
  int base_bound = 0;             ///< default 3 * ceil(log2 k)
  std::uint64_t final_bound = 0;  ///< base_bound^l, strict bound on omega/alpha of H
  std::uint64_t sharp_bound = 0;  ///< (base_bound - 1)^l, the achieved non-strict bound
  double target_bound_log2 = 0;   ///< epsilon * sqrt(log2 n) * log2 log2 n
  std::uint64_t target_bound = 0; ///< ceil(2^target_bound_log2), saturating
};

/// Picks (c, k, l) for a target size and epsilon. n >= 16; throws
/// ParameterError when no admissible c <= 2^20 exists.
ConstructionParams select_params(std::uint64_t n, double epsilon);

struct BoundCheck {
  std::uint64_t guaranteed = 0;  ///< final_bound = base_bound^l (strict)
  std::uint64_t sharp = 0;       ///< (base_bound - 1)^l (non-strict, what verification tests)
  std::uint64_t target = 0;      ///< ceil(2^(eps sqrt(log2 n) log2 log2 n))
  double target_log2 = 0.0;
  /// true iff the construction's bound already implies the target at this
  /// finite n; the target is asymptotic, so small n usually reports false.
  bool binding = false;
};

BoundCheck guaranteed_bound(const ConstructionParams& params);

struct ConstructOptions {
  std::optional<int> k;           ///< override base-graph order (>= 4)
  std::optional<int> l;           ///< override power exponent (>= 1)
  std::optional<int> base_bound;  ///< override the base-graph bound (>= 2)
  SearchMethod method = SearchMethod::enumeration;
  bool faithful_space = false;    ///< derive_spec(k) instead of the relaxed space
  std::optional<int> relaxed_r;   ///< field degree of the relaxed space
  std::optional<std::uint64_t> cap;
  std::uint64_t prng_seed = 0;
  std::optional<VerifyMode> verify;  ///< verify the output against sharp_bound + 1
  int threads = 1;
  std::size_t budget_bytes = kDefaultAdjacencyBudgetBytes;
};

inline constexpr std::uint64_t kDefaultSeedCap = std::uint64_t{1} << 20;

struct ConstructionResult {
  Graph graph;  ///< exactly n vertices
  ConstructionParams params;
  SearchOutcome outcome;  ///< the base graph and how it was found
  std::optional<SampleSpaceSpec> space;  ///< the space enumerated, when one was
  bool truncated = false; ///< k^l > n, output is the induced prefix subgraph
  std::optional<VerificationReport> final_report;
};

/// The whole pipeline: parameters, base-graph search, graph power, truncation
/// to n vertices, optional verification of the output. Deterministic: the same
/// inputs produce a bit-identical graph.
ConstructionResult construct_ramsey(std::uint64_t n, double epsilon,
                                    const ConstructOptions& options = {});

}  // namespace ramsey

#endif
