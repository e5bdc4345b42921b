#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "alliance/canonical.hpp"
#include "alliance/errors.hpp"
#include "alliance/graph.hpp"
#include "alliance/limits.hpp"
#include "alliance/parallel.hpp"

namespace alliance {

struct EnumerationStats {
  std::size_t order = 0;
  std::size_t graph_count = 0;
  /// Labeled candidates generated before canonical deduplication.
  std::size_t candidates = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct Enumeration {
  /// Canonically labeled representatives, sorted by canonical code.
  std::vector<Graph> graphs;
  EnumerationStats stats;
};

namespace detail {

/// Canonical-code keyed dedupe; the map keeps emission order sorted.
class CanonicalCollector {
 public:
  explicit CanonicalCollector(const Limits& limits) : limits_(limits) {}

  void offer(const Graph& g) {
    ++candidates_;
    const CanonicalLabeling cl = canonical_labeling(g, limits_);
    if (seen_.contains(cl.code)) return;
    std::vector<Vertex> mapping(g.order());
    for (std::size_t i = 0; i < cl.labeling.size(); ++i) mapping[cl.labeling[i]] = static_cast<Vertex>(i);
    seen_.emplace(cl.code, g.relabeled(mapping));
  }

  std::vector<Graph> take() {
    std::vector<Graph> out;
    out.reserve(seen_.size());
    for (auto& [code, g] : seen_) out.push_back(std::move(g));
    return out;
  }

  std::size_t candidates() const { return candidates_; }

 private:
  const Limits& limits_;
  std::map<CanonicalCode, Graph> seen_;
  std::size_t candidates_ = 0;
};

template <class Body>
Enumeration timed(std::size_t order, Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  Enumeration e;
  e.stats.order = order;
  body(e);
  e.stats.graph_count = e.graphs.size();
  e.stats.elapsed = std::chrono::steady_clock::now() - start;
  return e;
}

}  // namespace detail

/// Free trees on n vertices, one per isomorphism class. Built by attaching a leaf to every
/// vertex of every tree on n-1 vertices and deduplicating by canonical code.
inline Enumeration enumerate_trees_with_stats(std::size_t n, const Limits& limits = Limits::defaults()) {
  if (n == 0) throw InputError("tree order must be at least 1");
  require_order_within(n, limits.trees, "tree enumeration");
  require_order_within(n, limits.canonical, "tree enumeration");
  return detail::timed(n, [&](Enumeration& e) {
    std::vector<Graph> layer{Graph(1)};
    std::size_t candidates = 1;
    for (std::size_t m = 2; m <= n; ++m) {
      detail::CanonicalCollector collector(limits);
      for (const Graph& t : layer) {
        for (Vertex v = 0; v < t.order(); ++v) {
          collector.offer(t.with_vertices(1).with_edge(v, static_cast<Vertex>(t.order())));
        }
      }
      candidates = collector.candidates();
      layer = collector.take();
    }
    e.graphs = std::move(layer);
    e.stats.candidates = candidates;
  });
}

inline std::vector<Graph> enumerate_trees(std::size_t n, const Limits& limits = Limits::defaults()) {
  return enumerate_trees_with_stats(n, limits).graphs;
}

/// Connected unicyclic graphs on n vertices, one per isomorphism class: every tree on n
/// vertices plus every non-edge, deduplicated by canonical code. Trees are split across
/// `jobs` workers (0 = all cores); the merged output is sorted, so it does not depend on jobs.
inline Enumeration enumerate_unicyclic_with_stats(std::size_t n, const Limits& limits = Limits::defaults(),
                                                 std::size_t jobs = 1) {
  if (n < 3) throw InputError("unicyclic graphs need at least 3 vertices");
  require_order_within(n, limits.unicyclic, "unicyclic enumeration");
  require_order_within(n, limits.canonical, "unicyclic enumeration");
  const std::vector<Graph> trees = enumerate_trees(n, limits);
  return detail::timed(n, [&](Enumeration& e) {
    auto per_tree = parallel_map<std::vector<Graph>>(trees.size(), jobs, [&](std::size_t i) {
      detail::CanonicalCollector local(limits);
      const Graph& t = trees[i];
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (!t.adjacent(u, v)) local.offer(t.with_edge(u, v));
        }
      }
      return local.take();
    });
    detail::CanonicalCollector merged(limits);
    std::size_t candidates = 0;
    for (const auto& batch : per_tree) {
      for (const Graph& g : batch) merged.offer(g);
      candidates += n * (n - 1) / 2 - (n - 1);
    }
    e.stats.candidates = candidates;
    e.graphs = merged.take();
  });
}

inline std::vector<Graph> enumerate_unicyclic(std::size_t n, const Limits& limits = Limits::defaults(),
                                              std::size_t jobs = 1) {
  return enumerate_unicyclic_with_stats(n, limits, jobs).graphs;
}

}  // namespace alliance
