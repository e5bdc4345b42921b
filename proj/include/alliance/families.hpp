#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alliance/alliance.hpp"
#include "alliance/canonical.hpp"
#include "alliance/errors.hpp"
#include "alliance/graph.hpp"
#include "alliance/limits.hpp"

namespace alliance {

// ---------------------------------------------------------------------------
// Family F: r stars whose centers are joined by r-1 once-subdivided edges.
// ---------------------------------------------------------------------------

struct StarForestSpec {
  /// t_1..t_r, leaves per star.
  std::vector<std::size_t> star_sizes;
  /// r-1 pairs of star indices forming a tree on the centers.
  std::vector<std::pair<std::size_t, std::size_t>> center_edges;

  std::size_t star_count() const { return star_sizes.size(); }

  std::size_t order() const {
    return std::accumulate(star_sizes.begin(), star_sizes.end(), std::size_t{0}) + star_count() +
           center_edges.size();
  }

  void validate() const {
    const std::size_t r = star_count();
    if (r == 0) throw InputError("star forest needs at least one star");
    for (std::size_t t : star_sizes) {
      if (t == 0) throw InputError("every star needs at least one leaf");
    }
    if (r == 1 && star_sizes.front() < 2) throw InputError("a single star needs at least two leaves");
    if (center_edges.size() != r - 1) throw InputError("center tree needs exactly r-1 edges");
    std::vector<std::size_t> parent(r);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [a, b] : center_edges) {
      if (a >= r || b >= r || a == b) throw InputError("center edge endpoints must be distinct star indices");
      if (find(a) == find(b)) throw InputError("center edges contain a cycle");
      parent[find(a)] = find(b);
    }
    if (order() > Graph::kMaxOrder) throw InputError("star forest is too large");
  }

  bool operator==(const StarForestSpec&) const = default;
};

struct FMember {
  Graph graph;
  StarForestSpec spec;
};

/// Centers are 0..r-1, then the leaves star by star, then one subdivision vertex per center edge.
inline FMember generate_f(const StarForestSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  Vertex next = static_cast<Vertex>(spec.star_count());
  for (std::size_t i = 0; i < spec.star_count(); ++i) {
    for (std::size_t j = 0; j < spec.star_sizes[i]; ++j) edges.emplace_back(static_cast<Vertex>(i), next++);
  }
  for (const auto& [a, b] : spec.center_edges) {
    edges.emplace_back(static_cast<Vertex>(a), next);
    edges.emplace_back(static_cast<Vertex>(b), next);
    ++next;
  }
  return {Graph(spec.order(), edges), spec};
}

struct FRecognition {
  bool member = false;
  std::optional<StarForestSpec> spec;
};

/// Structural test: supports pairwise non-adjacent, and every vertex is a leaf, a support,
/// or a degree-two vertex between two supports.
inline FRecognition is_in_f(const Graph& t) {
  if (!is_tree(t)) throw DomainError("F membership is defined for trees");
  if (t.order() < 3) return {};
  const VertexSet leaf_set = leaves(t);
  const VertexSet support_set = supports(t);
  for (Vertex s : support_set) {
    if (t.neighbors(s).intersects(support_set)) return {};
  }
  std::vector<Vertex> links;
  for (Vertex v : t.vertices() - leaf_set - support_set) {
    const VertexSet nb = t.neighbors(v);
    if (nb.size() != 2 || !nb.subset_of(support_set)) return {};
    links.push_back(v);
  }

  const std::vector<Vertex> centers = support_set.to_vector();
  std::vector<std::size_t> index(t.order(), 0);
  for (std::size_t i = 0; i < centers.size(); ++i) index[centers[i]] = i;
  StarForestSpec spec;
  for (Vertex c : centers) spec.star_sizes.push_back((t.neighbors(c) & leaf_set).size());
  for (Vertex v : links) {
    const VertexSet nb = t.neighbors(v);
    spec.center_edges.emplace_back(index[nb.first()], index[nb.last()]);
  }
  return {true, std::move(spec)};
}

// ---------------------------------------------------------------------------
// Family G: G1(k) followed by any sequence of O1 / O2 steps.
// ---------------------------------------------------------------------------

struct G1Spec {
  /// Even cycle length, at least 4.
  std::size_t k = 4;

  void validate() const {
    if (k < 4 || k % 2 != 0) throw InputError("G1 cycle length must be even and at least 4, got " + std::to_string(k));
    if (order() > Graph::kMaxOrder) throw InputError("G1 cycle length too large");
  }
  std::size_t order() const { return 3 * k / 2; }
  bool operator==(const G1Spec&) const = default;
};

/// Cycle x_1..x_k is 0..k-1; the pendant at x_{2i-1} (vertex 2i-2) is vertex k+i-1.
inline Graph generate_g1(const G1Spec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  for (Vertex i = 0; i < spec.k; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % spec.k));
  for (Vertex i = 0; i < spec.k / 2; ++i) edges.emplace_back(2 * i, static_cast<Vertex>(spec.k + i));
  return Graph(spec.order(), edges);
}

struct GStep {
  enum class Op { O1, O2 };
  Op op = Op::O1;
  Vertex target = 0;
  bool operator==(const GStep&) const = default;
};

/// Base G1 plus ordered steps. Labels are allocated densely: O1 adds the next id as a leaf;
/// O2 adds a, b, c as the next three ids with a joined to the target and c the new leaf.
struct GBuildTrace {
  G1Spec base;
  std::vector<GStep> steps;

  static constexpr std::size_t added_by(GStep::Op op) { return op == GStep::Op::O1 ? 1 : 3; }

  std::size_t order() const {
    std::size_t n = base.order();
    for (const GStep& s : steps) n += added_by(s.op);
    return n;
  }

  /// Labels created by step i.
  std::vector<Vertex> created_by(std::size_t i) const {
    std::size_t n = base.order();
    for (std::size_t j = 0; j < i; ++j) n += added_by(steps[j].op);
    std::vector<Vertex> out(added_by(steps.at(i).op));
    std::iota(out.begin(), out.end(), static_cast<Vertex>(n));
    return out;
  }

  bool operator==(const GBuildTrace&) const = default;
};

struct GMember {
  Graph graph;
  GBuildTrace trace;
};

namespace detail {

inline Graph apply_step(const Graph& g, const GStep& step) {
  if (step.target >= g.order() || !supports(g).contains(step.target)) {
    throw PreconditionError(std::string(step.op == GStep::Op::O1 ? "O1" : "O2") + " target v" +
                            std::to_string(step.target) + " is not a support vertex");
  }
  const auto n = static_cast<Vertex>(g.order());
  if (step.op == GStep::Op::O1) return g.with_vertices(1).with_edge(step.target, n);
  return g.with_vertices(3).with_edge(step.target, n).with_edge(n, n + 1).with_edge(n + 1, n + 2);
}

}  // namespace detail

/// Rebuilds the graph described by a trace, checking every step's precondition.
inline Graph replay(const GBuildTrace& trace) {
  Graph g = generate_g1(trace.base);
  for (const GStep& step : trace.steps) g = detail::apply_step(g, step);
  return g;
}

inline GMember apply_o1(const Graph& g, const GBuildTrace& trace, Vertex support) {
  if (g.order() != trace.order()) throw InputError("graph does not match its trace");
  GMember out{detail::apply_step(g, {GStep::Op::O1, support}), trace};
  out.trace.steps.push_back({GStep::Op::O1, support});
  return out;
}

inline GMember apply_o2(const Graph& g, const GBuildTrace& trace, Vertex support) {
  if (g.order() != trace.order()) throw InputError("graph does not match its trace");
  GMember out{detail::apply_step(g, {GStep::Op::O2, support}), trace};
  out.trace.steps.push_back({GStep::Op::O2, support});
  return out;
}

inline GMember apply_o1(const GMember& m, Vertex support) { return apply_o1(m.graph, m.trace, support); }
inline GMember apply_o2(const GMember& m, Vertex support) { return apply_o2(m.graph, m.trace, support); }

/// "G1 k=4; O1 @v2; O2 @v2"
inline std::string to_string(const GBuildTrace& trace) {
  std::string out = "G1 k=" + std::to_string(trace.base.k);
  for (const GStep& s : trace.steps) {
    out += s.op == GStep::Op::O1 ? "; O1 @v" : "; O2 @v";
    out += std::to_string(s.target);
  }
  return out;
}

inline GBuildTrace parse_trace(std::string_view text) {
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](std::string_view token) {
    skip_spaces();
    if (text.substr(pos, token.size()) != token) throw ParseError("expected '" + std::string(token) + "'", pos);
    pos += token.size();
  };
  auto number = [&]() {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("expected a number", pos);
    pos = static_cast<std::size_t>(end - text.data());
    return value;
  };

  GBuildTrace trace;
  expect("G1");
  expect("k=");
  const std::size_t k_at = pos;
  trace.base.k = number();
  try {
    trace.base.validate();
  } catch (const InputError& e) {
    throw ParseError(e.what(), k_at);
  }
  while (true) {
    skip_spaces();
    if (pos == text.size()) break;
    expect(";");
    skip_spaces();
    GStep step;
    if (text.substr(pos, 2) == "O1") {
      step.op = GStep::Op::O1;
    } else if (text.substr(pos, 2) == "O2") {
      step.op = GStep::Op::O2;
    } else {
      throw ParseError("expected O1 or O2", pos);
    }
    pos += 2;
    expect("@v");
    step.target = static_cast<Vertex>(number());
    trace.steps.push_back(step);
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Family G0: G1 joined to a star system through a subdivided bridge.
// ---------------------------------------------------------------------------

struct G0Spec {
  G1Spec base;
  /// Index i of the cycle support x_{2i+1} (vertex 2i) that receives the bridge.
  std::size_t attach_support = 0;
  StarForestSpec forest;
  /// Star whose center is the far end of the bridge.
  std::size_t attach_star = 0;

  void validate() const {
    base.validate();
    forest.validate();
    if (attach_support >= base.k / 2) throw InputError("attach_support must index one of the k/2 cycle supports");
    if (attach_star >= forest.star_count()) throw InputError("attach_star out of range");
    if (base.order() + forest.order() + 1 > Graph::kMaxOrder) throw InputError("G0 instance too large");
  }
};

/// G1 labels first, then the forest labels shifted by |G1|, then the bridge subdivision vertex.
inline Graph generate_g0(const G0Spec& spec) {
  spec.validate();
  const Graph base = generate_g1(spec.base);
  const Graph forest = generate_f(spec.forest).graph;
  const auto shift = static_cast<Vertex>(base.order());
  std::vector<Edge> edges = base.edges();
  for (const auto& [u, v] : forest.edges()) edges.emplace_back(u + shift, v + shift);
  const auto bridge = static_cast<Vertex>(base.order() + forest.order());
  edges.emplace_back(static_cast<Vertex>(2 * spec.attach_support), bridge);
  edges.emplace_back(bridge, static_cast<Vertex>(spec.attach_star) + shift);
  return Graph(base.order() + forest.order() + 1, edges);
}

/// A G build trace for a G0 instance: O2 over the bridge, O1 to fill each star, and one O2
/// per center edge, walking the center tree outward from the attached star.
inline GBuildTrace g0_trace(const G0Spec& spec) {
  spec.validate();
  GBuildTrace trace{spec.base, {}};
  std::vector<std::optional<Vertex>> center(spec.forest.star_count());
  auto add_star = [&](std::size_t star, Vertex from) {
    const auto b = static_cast<Vertex>(trace.order() + 1);
    trace.steps.push_back({GStep::Op::O2, from});
    center[star] = b;
    for (std::size_t j = 1; j < spec.forest.star_sizes[star]; ++j) trace.steps.push_back({GStep::Op::O1, b});
  };
  add_star(spec.attach_star, static_cast<Vertex>(2 * spec.attach_support));
  std::deque<std::size_t> queue{spec.attach_star};
  while (!queue.empty()) {
    const std::size_t p = queue.front();
    queue.pop_front();
    for (const auto& [a, b] : spec.forest.center_edges) {
      const std::size_t q = a == p ? b : (b == p ? a : p);
      if (q == p || center[q]) continue;
      add_star(q, *center[p]);
      queue.push_back(q);
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Enumeration and recognition of G.
// ---------------------------------------------------------------------------

/// Every member of G with at most max_order vertices, one per isomorphism class, each with a
/// replayable trace. Sorted by order, then canonical code.
inline std::vector<GMember> enumerate_g(std::size_t max_order, const Limits& limits = Limits::defaults()) {
  require_order_within(max_order, limits.family_g, "family G enumeration");
  require_order_within(max_order, limits.canonical, "family G enumeration");
  std::map<std::pair<std::size_t, CanonicalCode>, GMember> seen;
  std::deque<GMember> queue;
  auto offer = [&](GMember m) {
    auto key = std::make_pair(m.graph.order(), canonical_form(m.graph, limits));
    if (seen.contains(key)) return;
    queue.push_back(m);
    seen.emplace(std::move(key), std::move(m));
  };
  for (std::size_t k = 4; 3 * k / 2 <= max_order; k += 2) {
    const G1Spec base{k};
    offer({generate_g1(base), GBuildTrace{base, {}}});
  }
  while (!queue.empty()) {
    const GMember m = std::move(queue.front());
    queue.pop_front();
    for (Vertex s : supports(m.graph)) {
      if (m.graph.order() + 1 <= max_order) offer(apply_o1(m, s));
      if (m.graph.order() + 3 <= max_order) offer(apply_o2(m, s));
    }
  }
  std::vector<GMember> out;
  out.reserve(seen.size());
  for (auto& [key, m] : seen) out.push_back(std::move(m));
  return out;
}

struct GRecognition {
  bool member = false;
  std::optional<GBuildTrace> trace;
};

namespace detail {

/// Undoes O1 / O2 steps on the subgraph induced by a shrinking vertex mask, backtracking over
/// every applicable undo and remembering (by canonical code) subgraphs already known to fail.
class GPeeler {
 public:
  GPeeler(const Graph& g, const Limits& limits) : g_(g), limits_(limits) {}

  std::optional<GBuildTrace> run() {
    if (!peel(g_.vertices())) return std::nullopt;
    return build_trace();
  }

 private:
  struct Undo {
    GStep::Op op;
    Vertex target;
    std::vector<Vertex> removed;  // O1: {leaf}; O2: {a, b, c}
  };

  std::size_t deg(VertexSet alive, Vertex v) const { return (g_.neighbors(v) & alive).size(); }

  VertexSet leaves_in(VertexSet alive) const {
    VertexSet out;
    for (Vertex v : alive) {
      if (deg(alive, v) == 1) out.insert(v);
    }
    return out;
  }

  bool is_support_in(VertexSet alive, Vertex v) const {
    return g_.neighbors(v).intersects(leaves_in(alive));
  }

  bool is_g1(VertexSet alive) const {
    const std::size_t n = alive.size();
    if (n < 6 || n % 3 != 0) return false;
    const VertexSet leaf_set = leaves_in(alive);
    if (leaf_set.size() != n / 3) return false;
    const VertexSet core = alive - leaf_set;
    VertexSet support_set;
    for (Vertex v : core) {
      if (deg(core, v) != 2) return false;
      const std::size_t pendants = (g_.neighbors(v) & leaf_set).size();
      if (pendants > 1) return false;
      if (pendants == 1) support_set.insert(v);
    }
    if (support_set.size() != n / 3) return false;
    for (Vertex s : support_set) {
      if (g_.neighbors(s).intersects(support_set)) return false;
    }
    return true;
  }

  bool peel(VertexSet alive) {
    if (is_g1(alive)) {
      base_ = alive;
      return true;
    }
    std::optional<CanonicalCode> code;
    if (alive.size() <= limits_.canonical) {
      code = canonical_form(g_.induced(alive), limits_);
      if (failed_.contains(*code)) return false;
    }
    const VertexSet leaf_set = leaves_in(alive);

    for (Vertex v : alive - leaf_set) {
      const VertexSet attached = g_.neighbors(v) & leaf_set;
      if (attached.size() < 2) continue;
      // leaves on one support are interchangeable
      const Vertex leaf = attached.first();
      undone_.push_back({GStep::Op::O1, v, {leaf}});
      if (peel(alive.without(leaf))) return true;
      undone_.pop_back();
    }

    for (Vertex c : leaf_set) {
      const Vertex b = (g_.neighbors(c) & alive).first();
      if (deg(alive, b) != 2) continue;
      const Vertex a = (g_.neighbors(b) & alive).without(c).first();
      if (deg(alive, a) != 2) continue;
      const Vertex x = (g_.neighbors(a) & alive).without(b).first();
      const VertexSet rest = alive - VertexSet{a, b, c};
      if (!is_support_in(rest, x)) continue;
      undone_.push_back({GStep::Op::O2, x, {a, b, c}});
      if (peel(rest)) return true;
      undone_.pop_back();
    }

    if (code) failed_.insert(*code);
    return false;
  }

  GBuildTrace build_trace() const {
    const VertexSet leaf_set = leaves_in(base_);
    const VertexSet core = base_ - leaf_set;
    const std::size_t k = core.size();
    std::vector<Vertex> label(g_.order(), 0);

    // walk the cycle from its lowest support, toward the lower-numbered neighbor
    Vertex start = 0;
    for (Vertex v : core) {
      if (g_.neighbors(v).intersects(leaf_set)) {
        start = v;
        break;
      }
    }
    Vertex prev = start;
    Vertex cur = start;
    for (Vertex i = 0; i < k; ++i) {
      label[cur] = i;
      if (i % 2 == 0) label[(g_.neighbors(cur) & leaf_set).first()] = static_cast<Vertex>(k + i / 2);
      const VertexSet next = (g_.neighbors(cur) & core).without(prev);
      prev = cur;
      cur = next.first();
    }

    GBuildTrace trace{G1Spec{k}, {}};
    auto next_label = static_cast<Vertex>(3 * k / 2);
    for (auto it = undone_.rbegin(); it != undone_.rend(); ++it) {
      trace.steps.push_back({it->op, label[it->target]});
      for (Vertex v : it->removed) label[v] = next_label++;
    }
    return trace;
  }

  const Graph& g_;
  const Limits& limits_;
  std::set<CanonicalCode> failed_;
  std::vector<Undo> undone_;
  VertexSet base_;
};

}  // namespace detail

/// Reverse-peeling recognizer. A returned trace replays to a graph isomorphic to g.
inline GRecognition is_in_g(const Graph& g, const Limits& limits = Limits::defaults()) {
  if (!is_unicyclic(g)) throw DomainError("G membership is defined for connected unicyclic graphs");
  // O1 keeps n - l + s and O2 adds 3 to it; G1(k) has 3k/2. The cycle is never touched.
  if (reduced_order(g) % 3 != 0 || cycle_vertices(g).size() % 2 != 0) return {};
  auto trace = detail::GPeeler(g, limits).run();
  if (!trace) return {};
  return {true, std::move(trace)};
}

}  // namespace alliance
