#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/errors.hpp"
#include "alliance/graph.hpp"
#include "alliance/limits.hpp"

namespace alliance {

struct SolveOptions {
  /// Collect every minimum GOA, sorted by mask value.
  bool all_minimum_sets = false;
  /// Seed the search with the applicable tree/unicyclic lower bounds. The
  /// verification harness turns this off so that it never assumes what it checks.
  bool use_structural_bounds = true;
};

struct SolveResult {
  std::size_t value = 0;
  /// Minimum GOA with the smallest mask value.
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_minimum_sets;
};

namespace detail {

inline void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw DomainError(std::string(what) + " requires a connected graph");
}

/// Calls visit(mask) for every k-subset of {0..n-1} in increasing mask order until it returns true.
template <class Visit>
bool for_each_subset_of_size(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  if (k == 0) return visit(VertexSet());
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  while (x < limit) {
    if (visit(VertexSet(x))) return true;
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return false;
}

/// Depth-first search over GOAs. At each node the lowest-index vertex that violates
/// the alliance condition is repaired by adding one undecided vertex of its closed
/// neighborhood; siblings exclude earlier choices, so no set is visited twice.
class GoaSearch {
 public:
  using Visitor = std::function<bool(VertexSet)>;

  explicit GoaSearch(const Graph& g) : g_(g), all_(g.vertices()) {}

  /// Visits alliances S with forced_in ⊆ S, S ∩ forced_out = ∅ and |S| <= budget that have
  /// no proper sub-alliance on the search path. Returns true if the visitor asked to stop.
  bool search(VertexSet in, VertexSet out, std::size_t budget, const Visitor& visit) const {
    VertexSet violated;
    for (Vertex v : all_ - in) {
      if (deficit(in, v) > 0) violated.insert(v);
    }
    if (violated.empty()) return visit(in);
    if (in.size() >= budget) return false;

    const VertexSet undecided = all_ - in - out;
    if (in.size() + lower_bound(in, undecided, violated) > budget) return false;

    const Vertex v = violated.first();
    for (Vertex u : closed_neighborhood(g_, v) & undecided) {
      if (search(in.with(u), out, budget, visit)) return true;
      out.insert(u);
    }
    return false;
  }

  bool feasible(VertexSet in, VertexSet out, std::size_t budget) const {
    return search(in, out, budget, [](VertexSet) { return true; });
  }

  /// Number of additions still needed before v (outside `in`) satisfies the majority condition.
  std::size_t deficit(VertexSet in, Vertex v) const {
    const std::size_t need = (g_.neighbors(v).size() + 2) / 2;
    const std::size_t have = (g_.neighbors(v) & in).size();
    return have >= need ? 0 : need - have;
  }

  /// Fewest additions that can cover the total deficit, given that adding u removes at most
  /// its own deficit plus one unit per violated neighbor. Returns n+1 when infeasible.
  std::size_t lower_bound(VertexSet in, VertexSet undecided, VertexSet violated) const {
    std::size_t total = 0;
    for (Vertex v : violated) {
      const std::size_t d = deficit(in, v);
      total += d;
      if (!undecided.contains(v) && (g_.neighbors(v) & undecided).size() < d) return g_.order() + 1;
    }
    std::vector<std::size_t> gains;
    gains.reserve(undecided.size());
    for (Vertex u : undecided) {
      const std::size_t own = violated.contains(u) ? deficit(in, u) : 0;
      gains.push_back(own + (g_.neighbors(u) & violated).size());
    }
    std::sort(gains.begin(), gains.end(), std::greater<>());
    std::size_t covered = 0;
    std::size_t count = 0;
    for (std::size_t gain : gains) {
      if (covered >= total) break;
      covered += gain;
      ++count;
    }
    return covered >= total ? count : g_.order() + 1;
  }

 private:
  const Graph& g_;
  VertexSet all_;
};

}  // namespace detail

/// Repeatedly adds the vertex that satisfies the most violated vertices (then: touches the
/// most violated vertices), lowest index first on ties.
inline VertexSet greedy_alliance(const Graph& g) {
  const detail::GoaSearch probe(g);
  VertexSet s;
  while (true) {
    VertexSet violated;
    for (Vertex v : g.vertices() - s) {
      if (probe.deficit(s, v) > 0) violated.insert(v);
    }
    if (violated.empty()) return s;
    Vertex best = 0;
    std::pair<std::size_t, std::size_t> best_score{0, 0};
    bool have = false;
    for (Vertex u : g.vertices() - s) {
      const VertexSet next = s.with(u);
      std::size_t fixed = 0;
      for (Vertex v : violated) {
        if (v == u || probe.deficit(next, v) == 0) ++fixed;
      }
      const std::pair<std::size_t, std::size_t> score{fixed, (closed_neighborhood(g, u) & violated).size()};
      if (!have || score > best_score) {
        best = u;
        best_score = score;
        have = true;
      }
    }
    s.insert(best);
  }
}

/// Exhaustive oracle: subsets by size, then by mask value. The first alliance found is the witness.
inline SolveResult gamma_o_brute_force(const Graph& g, bool all_minimum_sets = false,
                                       const Limits& limits = Limits::defaults()) {
  require_order_within(g.order(), limits.brute_force, "brute-force alliance search");
  detail::require_connected(g, "gamma_o");
  SolveResult result;
  for (std::size_t k = 0; k <= g.order(); ++k) {
    std::vector<VertexSet> found;
    detail::for_each_subset_of_size(g.order(), k, [&](VertexSet s) {
      if (!is_global_offensive_alliance(g, s)) return false;
      found.push_back(s);
      return !all_minimum_sets;
    });
    if (!found.empty()) {
      result.value = k;
      result.witness = found.front();
      if (all_minimum_sets) result.all_minimum_sets = std::move(found);
      return result;
    }
  }
  throw DomainError("no global offensive alliance found");  // unreachable: V is always one
}

/// Branch-and-bound exact solver. Same value and witness as the oracle.
inline SolveResult gamma_o(const Graph& g, const SolveOptions& options = {},
                           const Limits& limits = Limits::defaults()) {
  require_order_within(g.order(), limits.branch_bound, "branch-and-bound alliance search");
  detail::require_connected(g, "gamma_o");
  const detail::GoaSearch search(g);
  const VertexSet all = g.vertices();

  VertexSet root_violated;
  for (Vertex v : all) {
    if (search.deficit(VertexSet(), v) > 0) root_violated.insert(v);
  }
  std::size_t lower = search.lower_bound(VertexSet(), all, root_violated);
  if (options.use_structural_bounds && g.order() >= 3) {
    lower = std::max<std::size_t>(lower, static_cast<std::size_t>(bounds(g).best_lower_bound()));
  }
  const VertexSet greedy = greedy_alliance(g);

  SolveResult result;
  result.value = greedy.size();
  for (std::size_t k = lower; k < greedy.size(); ++k) {
    if (search.feasible(VertexSet(), VertexSet(), k)) {
      result.value = k;
      break;
    }
  }

  VertexSet in;
  VertexSet out;
  for (Vertex v = static_cast<Vertex>(g.order()); v-- > 0;) {
    if (search.feasible(in, out.with(v), result.value)) {
      out.insert(v);
    } else {
      in.insert(v);
    }
  }
  result.witness = in;

  if (options.all_minimum_sets) {
    std::vector<VertexSet> sets;
    search.search(VertexSet(), VertexSet(), result.value, [&](VertexSet s) {
      sets.push_back(s);
      return false;
    });
    std::sort(sets.begin(), sets.end());
    result.all_minimum_sets = std::move(sets);
  }
  return result;
}

/// Domination number by subset scan.
inline std::size_t gamma(const Graph& g, const Limits& limits = Limits::defaults()) {
  require_order_within(g.order(), limits.brute_force, "domination number");
  detail::require_connected(g, "gamma");
  for (std::size_t k = 0; k <= g.order(); ++k) {
    if (detail::for_each_subset_of_size(g.order(), k, [&](VertexSet s) { return is_dominating(g, s); })) return k;
  }
  return g.order();
}

struct SupportContainment {
  bool holds = false;
  /// The first minimum GOA (by mask value) containing every support vertex.
  std::optional<VertexSet> witness;
  std::size_t minimum_set_count = 0;
};

/// Scans every minimum GOA for one that contains all support vertices.
inline SupportContainment exists_min_goa_containing_supports(const Graph& g,
                                                             const Limits& limits = Limits::defaults()) {
  if (g.order() < 3) throw DomainError("support containment is stated for order at least 3");
  const SolveResult r = gamma_o_brute_force(g, true, limits);
  const VertexSet required = supports(g);
  SupportContainment out;
  out.minimum_set_count = r.all_minimum_sets->size();
  for (VertexSet s : *r.all_minimum_sets) {
    if (required.subset_of(s)) {
      out.holds = true;
      out.witness = s;
      break;
    }
  }
  return out;
}

}  // namespace alliance
