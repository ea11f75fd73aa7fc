#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

namespace {

// C(n, k) in exact integer arithmetic; throws on overflow.
std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > (~std::uint64_t{0}) / num) throw std::overflow_error("binomial overflow");
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

// Walks all (bound-2)-subsets of {0..k-1} \ {u,v}; calls fn(members) with the
// full bound-subset including u and v, sorted ascending.
template <typename Fn>
void for_each_superset(int k, int bound, int u, int v, Fn&& fn) {
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(k - 2));
  for (int w = 0; w < k; ++w)
    if (w != u && w != v) others.push_back(w);
  int need = bound - 2;
  std::vector<int> idx(static_cast<std::size_t>(need));
  for (int i = 0; i < need; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> subset;
  subset.reserve(static_cast<std::size_t>(bound));
  int limit = static_cast<int>(others.size());
  for (;;) {
    subset.clear();
    for (int i = 0; i < need; ++i)
      subset.push_back(others[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
    subset.push_back(u);
    subset.push_back(v);
    std::sort(subset.begin(), subset.end());
    fn(subset);
    // next combination
    int i = need - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == limit - need + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < need; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

double conditional_estimator_initial(int k, int bound) {
  double subsets = static_cast<double>(binomial(k, bound));
  double pair_count = static_cast<double>(binomial(bound, 2));
  return subsets * std::exp2(1.0 - pair_count);
}

SearchOutcome conditional_expectations_base_graph(int k, int bound, EstimatorTrace* trace) {
  if (k < 3) throw std::invalid_argument("conditional expectations requires k >= 3");
  if (bound < 3)
    throw ParameterError("bound " + std::to_string(bound) +
                         " is below 3; the estimator cannot certify anything");
  if (bound > k)
    throw std::invalid_argument("bound must be <= k for the estimator to mean anything");

  double initial = conditional_estimator_initial(k, bound);
  if (initial >= 1.0)
    throw ParameterError("initial estimator " + std::to_string(initial) +
                         " >= 1: bound " + std::to_string(bound) +
                         " is too small for k = " + std::to_string(k));

  // per-step work is C(k-2,bound-2) subsets x C(bound,2) edges
  double step_work = static_cast<double>(binomial(k - 2, bound - 2)) *
                     static_cast<double>(binomial(bound, 2));
  std::uint64_t m = edge_slot_count(static_cast<std::uint64_t>(k));
  if (step_work * static_cast<double>(m) > 4e9)
    throw CapacityError("conditional expectations at k = " + std::to_string(k) + ", bound = " +
                        std::to_string(bound) + " exceeds the desk-scale work budget");

  if (trace) {
    trace->initial = initial;
    trace->after_step.clear();
    trace->after_step.reserve(m);
  }

  // -1 unfixed, 0 absent, 1 present
  std::vector<signed char> fixed(m, -1);
  double estimator = initial;

  for (std::uint64_t slot = 0; slot < m; ++slot) {
    auto [u, v] = slot_to_pair(k, slot);
    double delta_absent = 0.0, delta_present = 0.0;
    for_each_superset(k, bound, u, v, [&](const std::vector<int>& subset) {
      int unfixed = 0;
      bool clique_alive = true, indep_alive = true;
      for (std::size_t a = 0; a < subset.size() && (clique_alive || indep_alive); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) {
          signed char st = fixed[pair_to_slot(k, subset[a], subset[b])];
          if (st < 0)
            ++unfixed;
          else if (st == 0)
            clique_alive = false;
          else
            indep_alive = false;
        }
      }
      if (!clique_alive && !indep_alive) return;
      // `slot` itself is among the unfixed edges of this subset
      double now = (static_cast<double>(clique_alive) + static_cast<double>(indep_alive)) *
                   std::exp2(static_cast<double>(-unfixed));
      double half_weight = std::exp2(static_cast<double>(-(unfixed - 1)));
      delta_present += (clique_alive ? half_weight : 0.0) - now;
      delta_absent += (indep_alive ? half_weight : 0.0) - now;
    });
    bool present = delta_present < delta_absent;  // tie -> absent
    double chosen = present ? delta_present : delta_absent;
    double next = estimator + chosen;
    if (next > estimator * (1.0 + 1e-9) + 1e-12)
      throw std::logic_error("pessimistic estimator increased while fixing a bit");
    fixed[slot] = present ? 1 : 0;
    estimator = next;
    if (trace) trace->after_step.push_back(estimator);
  }

  Bits bits(m);
  for (std::uint64_t s = 0; s < m; ++s)
    if (fixed[s] == 1) bits.set(s);
  Graph g = Graph::from_edge_bits(k, bits);

  SearchOutcome out;
  out.report = verify_bounds(g, bound, VerifyMode::decision);
  if (!out.report.passed)
    throw std::logic_error("conditional expectations produced a failing graph");
  out.graph = std::move(g);
  out.seeds_tried = 0;
  out.method = SearchMethod::conditional_expectations;
  return out;
}

}  // namespace ramsey
