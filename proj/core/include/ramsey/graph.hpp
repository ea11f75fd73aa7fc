#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "ramsey/bits.hpp"

namespace ramsey {

/// Number of vertex pairs C(n,2); also the length of an edge string.
inline std::uint64_t edge_slot_count(std::uint64_t n) { return n * (n - 1) / 2; }

/// Edge slots linearize the upper triangle in lexicographic pair order:
/// (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1).
std::uint64_t pair_to_slot(int order, int i, int j);
std::pair<int, int> slot_to_pair(int order, std::uint64_t slot);

/// Strictly increasing vertex indices. Carrier for witnesses and
/// induced-subgraph selections.
class VertexSet {
public:
  VertexSet() = default;

  /// `members` must already be strictly increasing; throws std::invalid_argument otherwise.
  static VertexSet checked(std::vector<int> members);

  /// Sorts `members`; throws std::invalid_argument on duplicates.
  static VertexSet sorted(std::vector<int> members);

  /// {0, 1, ..., n-1}
  static VertexSet range(int n);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  int operator[](int i) const { return members_[static_cast<std::size_t>(i)]; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

private:
  std::vector<int> members_;
};

/// Undirected simple graph as a packed adjacency bit-matrix.
///
/// Row u is a bit-row of length order(); bit v of row u is 1 iff {u,v} is an
/// edge. The matrix is symmetric with a zero diagonal. Rows are word-packed so
/// neighborhood intersection is word-parallel. Values are treated as immutable
/// once built; any number of threads may read one concurrently.
class Graph {
public:
  Graph() = default;

  /// Empty graph on `order` vertices. order >= 1.
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

  /// Builds from an edge string: bit s set means the pair at slot s is an edge.
  /// `bits.size()` must equal C(order,2).
  static Graph from_edge_bits(int order, const Bits& bits);

  int order() const { return order_; }
  std::size_t words_per_row() const { return wpr_; }

  bool adjacent(int u, int v) const {
    return (row_ptr(u)[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  /// Both directions; u != v.
  void add_edge(int u, int v);

  std::span<const std::uint64_t> row(int u) const { return {row_ptr(u), wpr_}; }

  int degree(int u) const;
  std::uint64_t edge_count() const;

  /// The edge string of the graph: bit s is the pair at slot s.
  Bits edge_bits() const;

  /// Checks symmetry, zero diagonal and clean padding; throws std::logic_error
  /// naming the first violation.
  void validate() const;

  bool operator==(const Graph& other) const = default;

private:
  const std::uint64_t* row_ptr(int u) const { return bits_.data() + static_cast<std::size_t>(u) * wpr_; }
  std::uint64_t* row_ptr(int u) { return bits_.data() + static_cast<std::size_t>(u) * wpr_; }

  int order_ = 0;
  std::size_t wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Edge-complement; diagonal stays zero. An involution.
Graph complement(const Graph& g);

/// Subgraph induced by `s` (nonempty, all members < g.order()); vertex a of the
/// result is s[a]. Throws std::invalid_argument / std::out_of_range.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);

}  // namespace ramsey

#endif
