#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alliance/errors.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, 1 <= n <= 62.
/// Adjacency is stored as one bitmask per vertex.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 62;

  /// Edgeless graph of order n.
  explicit Graph(std::size_t n) : adjacency_(checked_order(n)) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }
  VertexSet vertices() const { return VertexSet::range(order()); }

  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adjacency_[u].contains(v);
  }

  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  /// A copy with one more edge.
  Graph with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
  }

  /// A copy with `count` new isolated vertices numbered order()..order()+count-1.
  Graph with_vertices(std::size_t count) const {
    Graph g(order() + count);
    std::copy(adjacency_.begin(), adjacency_.end(), g.adjacency_.begin());
    g.edge_count_ = edge_count_;
    return g;
  }

  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing vertex order.
  Graph induced(VertexSet keep) const {
    const std::vector<Vertex> members = keep.to_vector();
    std::vector<Vertex> position(order(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<Vertex>(i);
    Graph g(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : adjacency_[members[i]] & keep) {
        if (members[i] < w) g.add_edge(static_cast<Vertex>(i), position[w]);
      }
    }
    return g;
  }

  /// Graph with vertex v renamed to mapping[v]. `mapping` must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> mapping) const {
    if (mapping.size() != order()) throw InputError("relabeling size does not match graph order");
    VertexSet seen;
    for (Vertex v : mapping) {
      if (v >= order() || seen.contains(v)) throw InputError("relabeling is not a permutation");
      seen.insert(v);
    }
    Graph g(order());
    for (const auto& [u, v] : edges()) g.add_edge(mapping[u], mapping[v]);
    return g;
  }

  bool operator==(const Graph&) const = default;

 private:
  static std::size_t checked_order(std::size_t n) {
    if (n == 0) throw InputError("graph order must be at least 1");
    if (n > kMaxOrder) throw InputError("graph order " + std::to_string(n) + " exceeds 62");
    return n;
  }

  void check_vertex(Vertex v) const {
    if (v >= order()) {
      throw InputError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
    }
  }

  void add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (adjacency_[u].contains(v)) {
      throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
    ++edge_count_;
  }

  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

inline VertexSet neighbors(const Graph& g, Vertex v) { return g.neighbors(v); }
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v).with(v); }
inline std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

/// Degree-one vertices.
inline VertexSet leaves(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).size() == 1) out.insert(v);
  }
  return out;
}

/// Vertices adjacent to at least one leaf.
inline VertexSet supports(const Graph& g) {
  VertexSet out;
  for (Vertex leaf : leaves(g)) out |= g.neighbors(leaf);
  return out;
}

/// Leaves attached at v.
inline VertexSet leaves_at(const Graph& g, Vertex v) { return g.neighbors(v) & leaves(g); }

/// Vertices reachable from `start`.
inline VertexSet component_of(const Graph& g, Vertex start) {
  VertexSet reached = VertexSet::single(start);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - reached;
    reached |= frontier;
  }
  return reached;
}

inline bool is_connected(const Graph& g) { return component_of(g, 0) == g.vertices(); }
inline bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && is_connected(g); }
inline bool is_unicyclic(const Graph& g) { return g.size() == g.order() && is_connected(g); }

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct CycleStats {
  VertexSet cycle_vertices;
  std::size_t cycle_length = 0;
  std::size_t cycle_leaf_count = 0;     // leaves adjacent to a cycle vertex
  std::size_t cycle_support_count = 0;  // cycle vertices that are supports
};

/// Vertices of the unique cycle, found by stripping degree-one vertices until none remain.
inline VertexSet cycle_vertices(const Graph& g) {
  if (!is_unicyclic(g)) throw DomainError("cycle statistics require a connected unicyclic graph");
  VertexSet alive = g.vertices();
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (Vertex v : alive) {
      if ((g.neighbors(v) & alive).size() <= 1) {
        alive.erase(v);
        stripped = true;
      }
    }
  }
  return alive;
}

inline CycleStats cycle_stats(const Graph& g) {
  CycleStats stats;
  stats.cycle_vertices = cycle_vertices(g);
  stats.cycle_length = stats.cycle_vertices.size();
  const VertexSet leaf_set = leaves(g);
  for (Vertex v : stats.cycle_vertices) {
    const std::size_t attached = (g.neighbors(v) & leaf_set).size();
    stats.cycle_leaf_count += attached;
    if (attached > 0) ++stats.cycle_support_count;
  }
  return stats;
}

/// Structural class of a connected graph, as reported by the CLI.
inline std::string graph_class_name(const Graph& g) {
  if (!is_connected(g)) return "disconnected";
  if (is_tree(g)) return "tree";
  if (is_unicyclic(g)) return "unicyclic";
  return "other";
}

namespace make {

inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g = g.with_edge(v - 1, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  return path(n).with_edge(0, static_cast<Vertex>(n - 1));
}

/// K_{1,t} with center 0.
inline Graph star(std::size_t t) {
  Graph g(t + 1);
  for (Vertex v = 1; v <= t; ++v) g = g.with_edge(0, v);
  return g;
}

}  // namespace make

}  // namespace alliance
