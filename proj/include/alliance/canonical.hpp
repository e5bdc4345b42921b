#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "alliance/graph.hpp"
#include "alliance/limits.hpp"

namespace alliance {

/// Label-invariant code of an isomorphism class: the order plus the adjacency rows
/// of the lexicographically greatest labeling reachable by the search below.
struct CanonicalCode {
  std::size_t order = 0;
  std::vector<std::uint64_t> rows;

  bool operator==(const CanonicalCode&) const = default;
  std::strong_ordering operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalLabeling {
  CanonicalCode code;
  /// labeling[i] is the vertex placed at canonical position i.
  std::vector<Vertex> labeling;
};

namespace detail {

using Cell = std::vector<Vertex>;
using OrderedPartition = std::vector<Cell>;

inline VertexSet cell_mask(const Cell& cell) {
  VertexSet s;
  for (Vertex v : cell) s.insert(v);
  return s;
}

/// Splits cells by neighbor counts into other cells until the partition is equitable.
/// New sub-cells are ordered by count, so the result is equivariant under relabeling.
inline void refine(const Graph& g, OrderedPartition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexSet splitter = cell_mask(cells[s]);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        Cell& cell = cells[i];
        if (cell.size() == 1) continue;
        std::vector<std::pair<std::size_t, Vertex>> keyed;
        keyed.reserve(cell.size());
        for (Vertex v : cell) keyed.emplace_back((g.neighbors(v) & splitter).size(), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        OrderedPartition pieces;
        for (std::size_t k = 0; k < keyed.size(); ++k) {
          if (k == 0 || keyed[k].first != keyed[k - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[k].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  CanonicalLabeling run() {
    OrderedPartition root{Cell(g_.order())};
    std::iota(root.front().begin(), root.front().end(), Vertex{0});
    std::vector<Vertex> prefix;
    search(std::move(root), prefix);
    return {std::move(*best_code_), std::move(best_labeling_)};
  }

 private:
  CanonicalCode encode(const std::vector<Vertex>& labeling) const {
    std::vector<Vertex> position(labeling.size());
    for (std::size_t i = 0; i < labeling.size(); ++i) position[labeling[i]] = static_cast<Vertex>(i);
    CanonicalCode code{labeling.size(), std::vector<std::uint64_t>(labeling.size(), 0)};
    for (std::size_t i = 0; i < labeling.size(); ++i) {
      std::uint64_t row = 0;
      for (Vertex w : g_.neighbors(labeling[i])) row |= std::uint64_t{1} << (63 - position[w]);
      code.rows[i] = row;
    }
    return code;
  }

  void visit_leaf(const OrderedPartition& cells) {
    std::vector<Vertex> labeling;
    labeling.reserve(g_.order());
    for (const Cell& c : cells) labeling.push_back(c.front());
    CanonicalCode code = encode(labeling);
    if (!best_code_ || code > *best_code_) {
      best_code_ = std::move(code);
      best_labeling_ = std::move(labeling);
    } else if (code == *best_code_) {
      std::vector<Vertex> automorphism(g_.order());
      for (std::size_t i = 0; i < labeling.size(); ++i) automorphism[best_labeling_[i]] = labeling[i];
      automorphisms_.push_back(std::move(automorphism));
    }
  }

  /// Union-find orbits of the automorphisms found so far that fix every prefix vertex.
  std::vector<Vertex> orbits_fixing(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(g_.order());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (Vertex v = 0; v < g_.order(); ++v) parent[find(v)] = find(gamma[v]);
    }
    for (Vertex v = 0; v < g_.order(); ++v) parent[v] = find(v);
    return parent;
  }

  void search(OrderedPartition cells, std::vector<Vertex>& prefix) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      visit_leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const Cell candidates = cells[t];
    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (!explored.empty()) {
        const std::vector<Vertex> orbit = orbits_fixing(prefix);
        const bool equivalent =
            std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbit[u] == orbit[v]; });
        if (equivalent) continue;
      }
      OrderedPartition child = cells;
      Cell rest;
      for (Vertex w : candidates) {
        if (w != v) rest.push_back(w);
      }
      child[t] = Cell{v};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t) + 1, std::move(rest));
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  const Graph& g_;
  std::optional<CanonicalCode> best_code_;
  std::vector<Vertex> best_labeling_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g, const Limits& limits = Limits::defaults()) {
  require_order_within(g.order(), limits.canonical, "canonical labeling");
  return detail::CanonicalSearch(g).run();
}

inline CanonicalCode canonical_form(const Graph& g, const Limits& limits = Limits::defaults()) {
  return canonical_labeling(g, limits).code;
}

/// The graph relabeled into canonical position order. Isomorphic inputs give equal outputs.
inline Graph canonical_graph(const Graph& g, const Limits& limits = Limits::defaults()) {
  const CanonicalLabeling cl = canonical_labeling(g, limits);
  std::vector<Vertex> mapping(g.order());
  for (std::size_t i = 0; i < cl.labeling.size(); ++i) mapping[cl.labeling[i]] = static_cast<Vertex>(i);
  return g.relabeled(mapping);
}

inline bool is_isomorphic(const Graph& a, const Graph& b, const Limits& limits = Limits::defaults()) {
  if (a.order() != b.order() || a.size() != b.size()) {
    require_order_within(std::max(a.order(), b.order()), limits.canonical, "isomorphism test");
    return false;
  }
  return canonical_form(a, limits) == canonical_form(b, limits);
}

}  // namespace alliance
