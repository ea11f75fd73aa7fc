#include "ramsey/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ramsey {

std::uint64_t pair_to_slot(int order, int i, int j) {
  if (i > j) std::swap(i, j);
  auto n = static_cast<std::uint64_t>(order);
  auto a = static_cast<std::uint64_t>(i);
  // offset of row i = sum_{x<i} (n-1-x)
  return a * (n - 1) - a * (a - 1) / 2 + static_cast<std::uint64_t>(j - i - 1);
}

std::pair<int, int> slot_to_pair(int order, std::uint64_t slot) {
  std::uint64_t row_len = static_cast<std::uint64_t>(order) - 1;
  std::uint64_t i = 0;
  while (slot >= row_len) {
    slot -= row_len;
    --row_len;
    ++i;
  }
  return {static_cast<int>(i), static_cast<int>(i + 1 + slot)};
}

VertexSet VertexSet::checked(std::vector<int> members) {
  for (std::size_t a = 0; a + 1 < members.size(); ++a)
    if (members[a] >= members[a + 1])
      throw std::invalid_argument("vertex set must be strictly increasing");
  if (!members.empty() && members.front() < 0)
    throw std::invalid_argument("vertex index must be non-negative");
  VertexSet s;
  s.members_ = std::move(members);
  return s;
}

VertexSet VertexSet::sorted(std::vector<int> members) {
  std::sort(members.begin(), members.end());
  return checked(std::move(members));
}

VertexSet VertexSet::range(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return checked(std::move(v));
}

Graph::Graph(int order)
    : order_(order),
      wpr_((static_cast<std::size_t>(order) + 63) / 64),
      bits_(static_cast<std::size_t>(order) * wpr_, 0) {
  if (order < 1) throw std::invalid_argument("graph order must be >= 1");
}

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edge_bits(int order, const Bits& bits) {
  if (bits.size() != edge_slot_count(static_cast<std::uint64_t>(order)))
    throw std::invalid_argument("edge string length does not match C(order,2)");
  Graph g(order);
  for (std::uint64_t s = bits.find_first(); s < bits.size(); s = bits.find_next(s)) {
    auto [i, j] = slot_to_pair(order, s);
    g.add_edge(i, j);
  }
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::out_of_range("edge endpoint out of range");
  row_ptr(u)[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  row_ptr(v)[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int u) const {
  int d = 0;
  for (auto w : row(u)) d += std::popcount(w);
  return d;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t twice = 0;
  for (int u = 0; u < order_; ++u) twice += static_cast<std::uint64_t>(degree(u));
  return twice / 2;
}

Bits Graph::edge_bits() const {
  Bits b(edge_slot_count(static_cast<std::uint64_t>(order_)));
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (adjacent(i, j)) b.set(pair_to_slot(order_, i, j));
  return b;
}

void Graph::validate() const {
  if (order_ < 1) throw std::logic_error("graph order must be >= 1");
  for (int u = 0; u < order_; ++u) {
    if (adjacent(u, u))
      throw std::logic_error("nonzero diagonal at vertex " + std::to_string(u));
    // padding words past bit order_-1 must be zero
    if (order_ & 63) {
      std::uint64_t pad = row_ptr(u)[wpr_ - 1] & (~std::uint64_t{0} << (order_ & 63));
      if (pad) throw std::logic_error("dirty padding in row " + std::to_string(u));
    }
    for (int v = u + 1; v < order_; ++v)
      if (adjacent(u, v) != adjacent(v, u))
        throw std::logic_error("asymmetric adjacency at (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
  }
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("induced subgraph of empty vertex set");
  for (int v : s)
    if (v >= g.order()) throw std::out_of_range("vertex set member exceeds graph order");
  Graph out(s.size());
  for (int a = 0; a < s.size(); ++a)
    for (int b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) out.add_edge(a, b);
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace ramsey
