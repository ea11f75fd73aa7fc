#ifndef RAMSEY_EXTREMAL_HPP
#define RAMSEY_EXTREMAL_HPP

#include <optional>

#include "ramsey/graph.hpp"

namespace ramsey {

/// A vertex set certifying a clique of `size` vertices. For independent sets
/// the same type certifies a clique of the complement.
struct CliqueWitness {
  VertexSet vertices;
  int size = 0;

  static CliqueWitness of(VertexSet v) {
    int n = v.size();
    return CliqueWitness{std::move(v), n};
  }
};

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);

/// Exact maximum clique by branch-and-bound over packed candidate bitsets with
/// a greedy-coloring upper bound. Branching order is descending degree (ties by
/// index); among all maximum cliques the returned witness is the
/// lexicographically smallest under that ordering, so repeated runs are
/// byte-identical. Worst case exponential; intended for desk scale.
CliqueWitness max_clique(const Graph& g);

/// max_clique of the complement; the witness is independent in g.
CliqueWitness max_independent_set(const Graph& g);

/// Decision variant: stops at the first clique of exactly `t` vertices and
/// prunes every branch whose coloring bound falls below t. Empty result means
/// exhaustively no t-clique exists. t >= 1.
std::optional<CliqueWitness> has_clique_of_size(const Graph& g, int t);

enum class VerifyMode { decision, exact };

/// Exact omega/alpha and their witnesses, or (decision mode) pass/fail against
/// `bound` with whatever lower-bound witnesses the run produced.
struct VerificationReport {
  int omega = 0;
  int alpha = 0;
  CliqueWitness omega_witness;
  CliqueWitness alpha_witness;
  int bound = 0;
  bool passed = false;
  /// true iff omega/alpha are the exact invariants rather than lower bounds
  bool exact = false;
};

/// Tests omega(g) < bound and alpha(g) < bound. Exact mode solves both
/// invariants fully; decision mode only decides the two bound queries (stopping
/// at the first bound-size witness) and reports greedy lower-bound witnesses
/// when the query comes back empty. bound >= 2.
VerificationReport verify_bounds(const Graph& g, int bound, VerifyMode mode);

}  // namespace ramsey

#endif
