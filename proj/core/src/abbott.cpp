#include "ramsey/abbott.hpp"

#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void check_capacity(std::uint64_t order, std::size_t budget_bytes) {
  std::uint64_t wpr = (order + 63) / 64;
  std::uint64_t bytes = order * wpr * 8;
  if (order > (std::uint64_t{1} << 30) || bytes > budget_bytes)
    throw CapacityError("product graph on " + std::to_string(order) +
                        " vertices exceeds the adjacency budget of " +
                        std::to_string(budget_bytes) + " bytes");
}

}  // namespace

Graph abbott_product(const Graph& g, const Graph& h, std::size_t budget_bytes) {
  std::uint64_t order = static_cast<std::uint64_t>(g.order()) * static_cast<std::uint64_t>(h.order());
  check_capacity(order, budget_bytes);
  int ho = h.order();
  Graph out(static_cast<int>(order));
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < ho; ++v) {
      int x = u * ho + v;
      // inside the copy of h sitting at u
      for (int vp = v + 1; vp < ho; ++vp)
        if (h.adjacent(v, vp)) out.add_edge(x, u * ho + vp);
      // complete join to every copy at a g-neighbor of u
      for (int up = u + 1; up < g.order(); ++up)
        if (g.adjacent(u, up))
          for (int vp = 0; vp < ho; ++vp) out.add_edge(x, up * ho + vp);
    }
  }
  return out;
}

Graph abbott_power(const Graph& g, int l, std::size_t budget_bytes) {
  if (l < 1) throw std::invalid_argument("power exponent must be >= 1");
  std::uint64_t k = static_cast<std::uint64_t>(g.order());
  std::uint64_t order = 1;
  for (int i = 0; i < l; ++i) {
    if (order > (std::uint64_t{1} << 62) / (k ? k : 1))
      throw CapacityError("g.order()^l overflows");
    order *= k;
  }
  check_capacity(order, budget_bytes);

  int n = static_cast<int>(order);
  // digits[x] = coordinate tuple of vertex x, most significant first
  std::vector<int> digits(static_cast<std::size_t>(n) * static_cast<std::size_t>(l));
  for (int x = 0; x < n; ++x) {
    std::uint64_t rem = static_cast<std::uint64_t>(x);
    for (int p = l - 1; p >= 0; --p) {
      digits[static_cast<std::size_t>(x) * l + p] = static_cast<int>(rem % k);
      rem /= k;
    }
  }

  Graph out(n);
  for (int x = 0; x < n; ++x) {
    const int* dx = &digits[static_cast<std::size_t>(x) * l];
    for (int y = x + 1; y < n; ++y) {
      const int* dy = &digits[static_cast<std::size_t>(y) * l];
      int p = 0;
      while (dx[p] == dy[p]) ++p;  // x != y, so some coordinate differs
      if (g.adjacent(dx[p], dy[p])) out.add_edge(x, y);
    }
  }
  return out;
}

}  // namespace ramsey
