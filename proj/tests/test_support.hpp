#pragma once

#include <random>
#include <vector>

#include "alliance/graph.hpp"

namespace alliance::testing {

/// Connected graph: a random spanning tree plus each remaining pair with probability p.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = static_cast<Vertex>(rng() % v);
    edges.emplace_back(u, v);
    used[u][v] = true;
  }
  std::bernoulli_distribution coin(p);
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (!used[i][j] && coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

/// Every labeled graph on n vertices, connected ones only.
inline std::vector<Graph> all_connected_labeled(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) edges.push_back(pairs[b]);
    }
    Graph g(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace alliance::testing

#include <set>

#include "alliance/canonical.hpp"
#include "alliance/enumeration.hpp"

namespace alliance::testing {

/// One representative of every connected graph on n vertices: trees, then repeatedly add one
/// non-edge and keep canonical forms.
inline std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  std::vector<Graph> layer = enumerate_trees(n);
  while (!layer.empty()) {
    std::set<CanonicalCode> next_codes;
    std::vector<Graph> next;
    for (const Graph& g : layer) {
      for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
          if (g.adjacent(i, j)) continue;
          const Graph h = g.with_edge(i, j);
          if (next_codes.insert(canonical_form(h)).second) next.push_back(canonical_graph(h));
        }
      }
    }
    for (Graph& g : layer) out.push_back(std::move(g));
    layer = std::move(next);
  }
  return out;
}

}  // namespace alliance::testing
