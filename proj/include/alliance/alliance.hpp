#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "alliance/graph.hpp"
#include "alliance/rational.hpp"

namespace alliance {

/// Every vertex outside s has a neighbor in s.
inline bool is_dominating(const Graph& g, VertexSet s) {
  for (Vertex v : g.vertices() - s) {
    if (!g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

/// True when v is outside s and |N[v] ∩ s| < |N[v] - s|, checked as 2|N[v] ∩ s| < deg(v) + 1.
inline bool violates_majority(const Graph& g, VertexSet s, Vertex v) {
  if (s.contains(v)) return false;
  const std::size_t inside = (g.neighbors(v) & s).size();
  return 2 * inside < g.neighbors(v).size() + 1;
}

/// Dominating, and every vertex outside s has at least half of its closed neighborhood in s.
inline bool is_global_offensive_alliance(const Graph& g, VertexSet s) {
  if (!is_dominating(g, s)) return false;
  for (Vertex v : g.vertices() - s) {
    if (violates_majority(g, s, v)) return false;
  }
  return true;
}

/// n - l + s, the quantity all three bounds are built from.
inline std::int64_t reduced_order(const Graph& g) {
  return static_cast<std::int64_t>(g.order()) - static_cast<std::int64_t>(leaves(g).size()) +
         static_cast<std::int64_t>(supports(g).size());
}

struct BoundReport {
  std::size_t order = 0;
  std::size_t leaf_count = 0;
  std::size_t support_count = 0;
  Rational tree_lower;        // (n - l + s + 1) / 3
  Rational unicyclic_lower;   // (n - l + s) / 3
  Rational bipartite_upper;   // (n - l + s) / 2
  bool tree_applies = false;
  bool unicyclic_applies = false;
  bool bipartite_applies = false;

  /// ceil of the largest applicable lower bound, or 0 when none applies.
  std::int64_t best_lower_bound() const {
    std::int64_t best = 0;
    if (tree_applies) best = std::max(best, tree_lower.ceil());
    if (unicyclic_applies) best = std::max(best, unicyclic_lower.ceil());
    return best;
  }
};

inline BoundReport bounds(const Graph& g) {
  if (g.order() < 3) throw DomainError("bounds are defined for order at least 3");
  if (!is_connected(g)) throw DomainError("bounds are defined for connected graphs");
  BoundReport r;
  r.order = g.order();
  r.leaf_count = leaves(g).size();
  r.support_count = supports(g).size();
  const std::int64_t base = reduced_order(g);
  r.tree_lower = Rational(base + 1, 3);
  r.unicyclic_lower = Rational(base, 3);
  r.bipartite_upper = Rational(base, 2);
  r.tree_applies = is_tree(g);
  r.unicyclic_applies = is_unicyclic(g);
  r.bipartite_applies = is_bipartite(g);
  return r;
}

}  // namespace alliance
