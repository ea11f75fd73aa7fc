#include "ramsey/construct.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      throw std::overflow_error("bound power overflows");
    r *= base;
  }
  return r;
}

void finish_bounds(ConstructionParams& p) {
  p.final_bound = checked_pow(static_cast<std::uint64_t>(p.base_bound), p.l);
  p.sharp_bound = checked_pow(static_cast<std::uint64_t>(p.base_bound - 1), p.l);
  double log2n = std::log2(static_cast<double>(p.n));
  p.target_bound_log2 = p.epsilon * std::sqrt(log2n) * std::log2(log2n);
  p.target_bound = p.target_bound_log2 >= 63.0
                       ? std::numeric_limits<std::uint64_t>::max()
                       : static_cast<std::uint64_t>(std::ceil(std::exp2(p.target_bound_log2)));
}

}  // namespace

ConstructionParams select_params(std::uint64_t n, double epsilon) {
  if (n < 16) throw std::invalid_argument("construction requires n >= 16");
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");

  constexpr int kMaxC = 1 << 20;
  int c = 0;
  for (int cand = 2; cand <= kMaxC; ++cand) {
    if ((std::log2(static_cast<double>(cand)) + 2.0) / (2.0 * cand) < epsilon) {
      c = cand;
      break;
    }
  }
  if (c == 0)
    throw ParameterError("epsilon too small: no admissible c <= 2^20 satisfies the exponent bound");

  double log2n = std::log2(static_cast<double>(n));
  int l = std::max(1, static_cast<int>(std::ceil(std::sqrt(log2n) / static_cast<double>(c))));

  // smallest k with k^l >= n, never below 4
  std::uint64_t k = static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<double>(n), 1.0 / static_cast<double>(l))));
  if (k < 1) k = 1;
  while (checked_pow(k, l) < n) ++k;
  while (k > 1 && checked_pow(k - 1, l) >= n) --k;  // guard against pow() drift
  if (k < 4) k = 4;

  ConstructionParams p;
  p.n = n;
  p.epsilon = epsilon;
  p.c = c;
  p.k = static_cast<int>(k);
  p.l = l;
  p.base_bound = default_base_bound(p.k);
  finish_bounds(p);
  return p;
}

BoundCheck guaranteed_bound(const ConstructionParams& params) {
  BoundCheck b;
  b.guaranteed = params.final_bound;
  b.sharp = params.sharp_bound;
  b.target = params.target_bound;
  b.target_log2 = params.target_bound_log2;
  b.binding = params.final_bound <= params.target_bound;
  return b;
}

ConstructionResult construct_ramsey(std::uint64_t n, double epsilon,
                                    const ConstructOptions& options) {
  ConstructionParams params = select_params(n, epsilon);
  if (options.k) {
    if (*options.k < 4) throw std::invalid_argument("k override must be >= 4");
    params.k = *options.k;
  }
  if (options.l) {
    if (*options.l < 1) throw std::invalid_argument("l override must be >= 1");
    params.l = *options.l;
  }
  if (options.base_bound) {
    if (*options.base_bound < 2) throw std::invalid_argument("base bound override must be >= 2");
    params.base_bound = *options.base_bound;
  } else if (options.k) {
    params.base_bound = default_base_bound(params.k);
  }
  finish_bounds(params);

  std::uint64_t product_order = checked_pow(static_cast<std::uint64_t>(params.k), params.l);
  if (product_order < n)
    throw std::invalid_argument("k^l = " + std::to_string(product_order) +
                                " does not cover n = " + std::to_string(n));

  SearchOutcome outcome;
  std::optional<SampleSpaceSpec> space;
  switch (options.method) {
    case SearchMethod::enumeration: {
      SampleSpaceSpec spec = options.faithful_space
                                 ? derive_spec(params.k)
                                 : relaxed_spec(params.k, options.relaxed_r
                                                              ? *options.relaxed_r
                                                              : kDefaultRelaxedDegree);
      space = spec;
      outcome = search_base_graph(params.k, params.base_bound, spec,
                                  options.cap ? *options.cap : kDefaultSeedCap, options.threads);
      break;
    }
    case SearchMethod::conditional_expectations:
      outcome = conditional_expectations_base_graph(params.k, params.base_bound);
      break;
    case SearchMethod::prng_fallback:
      outcome = prng_base_graph(params.k, params.base_bound, options.prng_seed,
                                options.cap ? *options.cap : 1024);
      break;
  }

  ConstructionResult result;
  result.params = params;
  result.space = std::move(space);
  Graph powered = params.l == 1 ? outcome.graph
                                : abbott_power(outcome.graph, params.l, options.budget_bytes);
  if (product_order > n) {
    result.graph = induced_subgraph(powered, VertexSet::range(static_cast<int>(n)));
    result.truncated = true;
  } else {
    result.graph = std::move(powered);
    result.truncated = false;
  }
  result.outcome = std::move(outcome);

  if (options.verify) {
    int strict = static_cast<int>(params.sharp_bound) + 1;
    if (strict < 2) strict = 2;
    result.final_report = verify_bounds(result.graph, strict, *options.verify);
  }
  return result;
}

}  // namespace ramsey
