#include "ramsey/extremal.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ramsey {

bool is_clique(const Graph& g, const VertexSet& s) {
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b)
      if (!g.adjacent(s[a], s[b])) return false;
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) return false;
  return true;
}

namespace {

// Branch-and-bound solver on a degree-reordered copy of the input graph.
// Candidates are explored in ascending reordered index, so cliques are visited
// in lexicographic order of their vertex sequences; together with
// strict-improvement updates this makes the final witness the
// lexicographically smallest maximum clique under the solver ordering.
class CliqueSolver {
public:
  explicit CliqueSolver(const Graph& g) : n_(g.order()), reordered_(g.order()) {
    perm_.resize(static_cast<std::size_t>(n_));
    std::iota(perm_.begin(), perm_.end(), 0);
    std::vector<int> deg(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    std::stable_sort(perm_.begin(), perm_.end(), [&](int a, int b) {
      int da = deg[static_cast<std::size_t>(a)], db = deg[static_cast<std::size_t>(b)];
      return da != db ? da > db : a < b;
    });
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] = i;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (g.adjacent(u, v))
          reordered_.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  }

  // Exact maximum clique, witness in original vertex indices (ascending).
  CliqueWitness solve_max() {
    target_ = 0;
    best_size_ = greedy_seed_size() - 1;  // prune as if a clique this big exists
    if (best_size_ < 0) best_size_ = 0;
    best_.clear();
    std::vector<int> cur;
    Bits cands(static_cast<std::size_t>(n_));
    cands.set_all();
    expand(cur, cands);
    return to_witness(best_);
  }

  // First clique of exactly t vertices, if any.
  std::optional<CliqueWitness> solve_decision(int t) {
    if (t < 1) throw std::invalid_argument("clique size target must be >= 1");
    if (t > n_) return std::nullopt;
    target_ = t;
    best_size_ = 0;
    best_.clear();
    std::vector<int> cur;
    Bits cands(static_cast<std::size_t>(n_));
    cands.set_all();
    expand(cur, cands);
    if (static_cast<int>(best_.size()) == t) return to_witness(best_);
    return std::nullopt;
  }

private:
  int greedy_seed_size() const {
    Bits cands(static_cast<std::size_t>(n_));
    cands.set_all();
    int size = 0;
    for (std::size_t v = cands.find_first(); v < cands.size(); v = cands.find_first()) {
      ++size;
      cands.and_with(reordered_.row(static_cast<int>(v)));
    }
    return size;
  }

  int color_bound(const Bits& cands) const {
    Bits uncolored = cands;
    int colors = 0;
    while (uncolored.any()) {
      ++colors;
      Bits avail = uncolored;
      while (avail.any()) {
        std::size_t v = avail.find_first();
        uncolored.reset(v);
        avail.reset(v);
        avail.andnot_with(reordered_.row(static_cast<int>(v)));
      }
    }
    return colors;
  }

  // Returns true when the decision target has been reached and search can stop.
  bool expand(std::vector<int>& cur, Bits cands) {
    int depth = static_cast<int>(cur.size());
    while (cands.any()) {
      if (target_ > 0) {
        if (depth + static_cast<int>(cands.count()) < target_) return false;
        if (depth + color_bound(cands) < target_) return false;
      } else {
        if (depth + color_bound(cands) <= best_size_) return false;
      }
      std::size_t v = cands.find_first();
      cands.reset(v);
      cur.push_back(static_cast<int>(v));
      if (target_ > 0 && static_cast<int>(cur.size()) == target_) {
        best_ = cur;
        return true;
      }
      Bits child = cands;
      child.and_with(reordered_.row(static_cast<int>(v)));
      if (child.any()) {
        if (expand(cur, std::move(child))) return true;
      } else if (static_cast<int>(cur.size()) > best_size_) {
        best_size_ = static_cast<int>(cur.size());
        best_ = cur;
      }
      cur.pop_back();
    }
    return false;
  }

  CliqueWitness to_witness(const std::vector<int>& solver_vertices) const {
    std::vector<int> orig;
    orig.reserve(solver_vertices.size());
    for (int i : solver_vertices) orig.push_back(perm_[static_cast<std::size_t>(i)]);
    return CliqueWitness::of(VertexSet::sorted(std::move(orig)));
  }

  int n_;
  Graph reordered_;
  std::vector<int> perm_;  // solver index -> original vertex
  int target_ = 0;         // 0 = exact maximum mode
  int best_size_ = 0;
  std::vector<int> best_;
};

// Deterministic maximal clique in ascending index order; a cheap lower-bound
// witness for decision-mode reports.
CliqueWitness greedy_clique(const Graph& g) {
  Bits cands(static_cast<std::size_t>(g.order()));
  cands.set_all();
  std::vector<int> picked;
  for (std::size_t v = cands.find_first(); v < cands.size(); v = cands.find_first()) {
    picked.push_back(static_cast<int>(v));
    cands.and_with(g.row(static_cast<int>(v)));
  }
  return CliqueWitness::of(VertexSet::sorted(std::move(picked)));
}

}  // namespace

CliqueWitness max_clique(const Graph& g) { return CliqueSolver(g).solve_max(); }

CliqueWitness max_independent_set(const Graph& g) { return max_clique(complement(g)); }

std::optional<CliqueWitness> has_clique_of_size(const Graph& g, int t) {
  return CliqueSolver(g).solve_decision(t);
}

VerificationReport verify_bounds(const Graph& g, int bound, VerifyMode mode) {
  if (bound < 2) throw std::invalid_argument("bound must be >= 2");
  VerificationReport r;
  r.bound = bound;
  if (mode == VerifyMode::exact) {
    r.exact = true;
    r.omega_witness = max_clique(g);
    r.alpha_witness = max_independent_set(g);
    r.omega = r.omega_witness.size;
    r.alpha = r.alpha_witness.size;
    r.passed = r.omega < bound && r.alpha < bound;
    return r;
  }
  r.exact = false;
  Graph co = complement(g);
  auto cw = has_clique_of_size(g, bound);
  r.omega_witness = cw ? *cw : greedy_clique(g);
  r.omega = r.omega_witness.size;
  if (cw) {
    // failed already; report a greedy witness on the independence side
    r.alpha_witness = greedy_clique(co);
    r.alpha = r.alpha_witness.size;
    r.passed = false;
    return r;
  }
  auto iw = has_clique_of_size(co, bound);
  r.alpha_witness = iw ? *iw : greedy_clique(co);
  r.alpha = r.alpha_witness.size;
  r.passed = !iw;
  return r;
}

}  // namespace ramsey
