#ifndef RAMSEY_ABBOTT_HPP
#define RAMSEY_ABBOTT_HPP

#include <cstddef>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Default ceiling on adjacency-matrix memory for product/power results (1 GiB).
inline constexpr std::size_t kDefaultAdjacencyBudgetBytes = std::size_t{1} << 30;

/// Graph product on V(G) x V(H): (u,v) ~ (u',v') iff u ~ u' in G, or u = u'
/// and v ~ v' in H. Each vertex of G is replaced by a copy of H; two copies are
/// fully joined or fully separated according to adjacency in G. Both the clique
/// number and the independence number are multiplicative under this product.
///
/// Vertex (u,v) of the result has index u * h.order() + v.
/// Throws CapacityError if the result matrix would exceed `budget_bytes`.
Graph abbott_product(const Graph& g, const Graph& h,
                     std::size_t budget_bytes = kDefaultAdjacencyBudgetBytes);

/// l-fold product of g with itself, folded from the left, so the vertex index
/// is the base-g.order() value of the coordinate tuple, most significant
/// coordinate first. Built by evaluating the product edge rule directly on
/// index tuples (two tuples are adjacent iff their first differing coordinates
/// are adjacent in g), with no intermediate matrices.
///
/// l >= 1; throws std::invalid_argument for l = 0, CapacityError when
/// g.order()^l exceeds the budget.
Graph abbott_power(const Graph& g, int l,
                   std::size_t budget_bytes = kDefaultAdjacencyBudgetBytes);

}  // namespace ramsey

#endif
