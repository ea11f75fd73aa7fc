#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/extremal.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/sample_space.hpp"

namespace ramsey {

enum class SearchMethod { enumeration, conditional_expectations, prng_fallback };

/// The default strict target for base-graph searches: 3 * ceil(log2 k).
int default_base_bound(int k);

/// A base graph on k vertices together with how it was found and the
/// decision-mode report that certifies omega, alpha < bound.
struct SearchOutcome {
  Graph graph;
  std::optional<Seed> seed;  ///< absent for the non-enumeration methods
  std::uint64_t seeds_tried = 0;
  VerificationReport report;
  SearchMethod method = SearchMethod::enumeration;
};

/// Walks the sample space in lexicographic seed order, expands each seed to an
/// edge string, decodes it to a graph and returns the first one that passes
/// verify_bounds(g, bound, decision). seeds_tried counts the successful seed's
/// rank + 1 and is identical no matter how many worker threads run.
///
/// Requires bound >= 2 and spec.m == C(k,2). Throws SearchExhausted when `cap`
/// (or the whole space) is exhausted without a passing graph.
SearchOutcome search_base_graph(int k, int bound, const SampleSpaceSpec& spec,
                                std::optional<std::uint64_t> cap = std::nullopt,
                                int threads = 1);

/// Initial value of the pessimistic estimator: C(k,bound) * 2^(1 - C(bound,2)),
/// the expected number of monochromatic bound-subsets of a uniform random
/// graph on k vertices.
double conditional_estimator_initial(int k, int bound);

/// Per-step estimator values, recorded when a trace pointer is supplied.
struct EstimatorTrace {
  double initial = 0.0;
  std::vector<double> after_step;  ///< one entry per fixed edge slot
};

/// Derandomization without any sample space: fixes the C(k,2) edge bits one at
/// a time in slot order, each time choosing the value that minimizes the
/// pessimistic estimator
///     sum over bound-subsets S of ( Pr[S all-present] + Pr[S all-absent] )
/// conditioned on the bits fixed so far. Because the two choices average to
/// the current value, the minimum never exceeds it; with the initial value
/// below 1 the final (integer) count of monochromatic bound-subsets is 0,
/// i.e. omega, alpha < bound outright.
///
/// Steps touch only the C(k-2, bound-2) subsets containing the edge being
/// fixed. Requires bound >= 3 and an initial estimator < 1 (ParameterError
/// otherwise); throws CapacityError when the subset work is beyond desk scale.
SearchOutcome conditional_expectations_base_graph(int k, int bound,
                                                  EstimatorTrace* trace = nullptr);

/// Seeded pseudorandom edge strings (std::mt19937_64, one bit per slot from
/// the low bit of each draw). Fast but NOT derandomized; never a default.
SearchOutcome prng_base_graph(int k, int bound, std::uint64_t prng_seed,
                              std::uint64_t cap = 1024);

}  // namespace ramsey

#endif
