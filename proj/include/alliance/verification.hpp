#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "alliance/alliance.hpp"
#include "alliance/enumeration.hpp"
#include "alliance/errors.hpp"
#include "alliance/families.hpp"
#include "alliance/graph.hpp"
#include "alliance/graph6.hpp"
#include "alliance/limits.hpp"
#include "alliance/parallel.hpp"
#include "alliance/rational.hpp"
#include "alliance/solver.hpp"

namespace alliance {

inline constexpr const char* kReportSchema = "alliance-lab/verification-report";
inline constexpr int kReportVersion = 1;

struct VerifyConfig {
  std::size_t max_tree = 10;
  std::size_t max_unicyclic = 10;
  /// Largest order for which every minimum GOA is enumerated (extremal structure and support containment).
  std::size_t max_all_min_sets = 10;
  /// Worker threads; 0 means all cores. Never affects report contents.
  std::size_t jobs = 0;
  Limits limits = Limits::defaults();
};

enum class CorpusClass { Tree, Unicyclic };

inline const char* to_string(CorpusClass c) { return c == CorpusClass::Tree ? "tree" : "unicyclic"; }

struct GraphRecord {
  CorpusClass graph_class = CorpusClass::Tree;
  std::string graph6;
  std::size_t n = 0;
  std::size_t l = 0;
  std::size_t s = 0;
  std::size_t cycle_length = 0;  // 0 for trees
  std::size_t gamma_o = 0;
  /// (n-l+s+1)/3 for trees, (n-l+s)/3 for unicyclic graphs.
  Rational lower_bound;
  bool equality = false;
  /// F membership for trees, G membership for unicyclic graphs.
  bool in_family = false;
  std::optional<std::size_t> all_min_goa_count;

  // kept for the checks, not serialized
  Graph graph{1};
  VertexSet witness;
  std::vector<VertexSet> minimum_sets;
};

struct Counterexample {
  std::string check;
  std::string graph6;
  std::string details;
  bool asserted = true;
};

struct CheckResult {
  std::string id;
  std::string claim;
  /// Informational checks record an empirical truth value and never fail a run.
  bool asserted = true;
  std::string corpus;
  std::size_t examined = 0;
  std::size_t passed = 0;
  std::vector<Counterexample> counterexamples;

  std::size_t failed() const { return counterexamples.size(); }
};

struct CorpusSummary {
  CorpusClass graph_class = CorpusClass::Tree;
  std::size_t min_order = 0;
  std::size_t max_order = 0;
  std::map<std::size_t, std::size_t> counts;
};

struct VerificationReport {
  std::vector<CorpusSummary> corpora;
  std::vector<CheckResult> checks;
  std::vector<GraphRecord> records;
  std::chrono::nanoseconds runtime{0};

  std::size_t violations() const {
    std::size_t total = 0;
    for (const auto& c : checks) {
      if (c.asserted) total += c.failed();
    }
    return total;
  }
  bool has_violations() const { return violations() > 0; }

  const CheckResult* find(const std::string& id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }

  void merge(VerificationReport other) {
    for (auto& c : other.corpora) corpora.push_back(std::move(c));
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& r : other.records) records.push_back(std::move(r));
    runtime += other.runtime;
  }
};

namespace detail {

inline std::string describe(CorpusClass c, std::size_t lo, std::size_t hi) {
  return std::string(to_string(c)) + " graphs of order " + std::to_string(lo) + ".." + std::to_string(hi);
}

/// Solves one corpus graph. The solver runs without structural bounds so that the bound
/// checks are not circular.
inline GraphRecord make_record(const Graph& g, CorpusClass cls, const VerifyConfig& config) {
  GraphRecord r;
  r.graph_class = cls;
  r.graph = g;
  r.graph6 = encode_graph6(g);
  r.n = g.order();
  r.l = leaves(g).size();
  r.s = supports(g).size();
  const bool want_sets = g.order() <= config.max_all_min_sets;
  const SolveResult solved = gamma_o(g, SolveOptions{want_sets, false}, config.limits);
  r.gamma_o = solved.value;
  r.witness = solved.witness;
  const std::int64_t base = reduced_order(g);
  if (cls == CorpusClass::Tree) {
    r.lower_bound = Rational(base + 1, 3);
    r.equality = 3 * static_cast<std::int64_t>(r.gamma_o) == base + 1;
    r.in_family = is_in_f(g).member;
  } else {
    r.cycle_length = cycle_vertices(g).size();
    r.lower_bound = Rational(base, 3);
    r.equality = 3 * static_cast<std::int64_t>(r.gamma_o) == base;
    r.in_family = is_in_g(g, config.limits).member;
  }
  if (solved.all_minimum_sets) {
    r.minimum_sets = *solved.all_minimum_sets;
    r.all_min_goa_count = r.minimum_sets.size();
  }
  return r;
}

inline VerificationReport build_corpus(CorpusClass cls, std::size_t max_order, const VerifyConfig& config) {
  VerificationReport report;
  CorpusSummary summary{cls, 3, max_order, {}};
  std::vector<Graph> graphs;
  for (std::size_t n = 3; n <= max_order; ++n) {
    std::vector<Graph> layer = cls == CorpusClass::Tree ? enumerate_trees(n, config.limits)
                                                        : enumerate_unicyclic(n, config.limits, config.jobs);
    summary.counts[n] = layer.size();
    for (Graph& g : layer) graphs.push_back(std::move(g));
  }
  report.records = parallel_map<GraphRecord>(graphs.size(), config.jobs,
                                             [&](std::size_t i) { return make_record(graphs[i], cls, config); });
  std::stable_sort(report.records.begin(), report.records.end(), [](const GraphRecord& a, const GraphRecord& b) {
    return a.n != b.n ? a.n < b.n : a.graph6 < b.graph6;
  });
  report.corpora.push_back(std::move(summary));
  return report;
}

using Predicate = std::function<std::optional<std::string>(const GraphRecord&)>;

/// Runs `failure` on every record selected by `applies`; a returned string is a counterexample.
inline CheckResult run_check(std::string id, std::string claim, bool asserted, std::string corpus,
                             const std::vector<GraphRecord>& records,
                             const std::function<bool(const GraphRecord&)>& applies, const Predicate& failure) {
  CheckResult c{std::move(id), std::move(claim), asserted, std::move(corpus), 0, 0, {}};
  for (const GraphRecord& r : records) {
    if (!applies(r)) continue;
    ++c.examined;
    if (auto why = failure(r)) {
      c.counterexamples.push_back({c.id, r.graph6, *why, asserted});
    } else {
      ++c.passed;
    }
  }
  return c;
}

inline std::string fmt_counts(const GraphRecord& r) {
  return "n=" + std::to_string(r.n) + " l=" + std::to_string(r.l) + " s=" + std::to_string(r.s) +
         " gamma_o=" + std::to_string(r.gamma_o) + " bound=" + r.lower_bound.to_string();
}

inline bool is_class(const GraphRecord& r, CorpusClass c) { return r.graph_class == c; }

inline std::vector<CheckResult> record_checks(const std::vector<GraphRecord>& records, const std::string& corpus) {
  return {run_check("record-consistency", "witness is a GOA of size gamma_o and the equality flag matches the counts",
                    true, corpus, records, [](const GraphRecord&) { return true; },
                    [](const GraphRecord& r) -> std::optional<std::string> {
                      if (r.witness.size() != r.gamma_o || !is_global_offensive_alliance(r.graph, r.witness)) {
                        return "witness " + r.witness.to_string() + " is not a GOA of size " +
                               std::to_string(r.gamma_o);
                      }
                      const std::int64_t base = reduced_order(r.graph) + (is_class(r, CorpusClass::Tree) ? 1 : 0);
                      if (r.equality != (3 * static_cast<std::int64_t>(r.gamma_o) == base)) {
                        return "equality flag disagrees with " + fmt_counts(r);
                      }
                      return std::nullopt;
                    })};
}

inline std::vector<CheckResult> tree_checks(const std::vector<GraphRecord>& records, const std::string& corpus) {
  auto trees = [](const GraphRecord& r) { return is_class(r, CorpusClass::Tree); };
  return {
      run_check("tree-lower-bound", "gamma_o(T) >= (n-l+s+1)/3 for every tree of order >= 3", true, corpus, records,
                trees,
                [](const GraphRecord& r) -> std::optional<std::string> {
                  if (Rational(static_cast<std::int64_t>(r.gamma_o)) >= r.lower_bound) return std::nullopt;
                  return "bound violated: " + fmt_counts(r);
                }),
      run_check("tree-equality-iff-F", "gamma_o(T) = (n-l+s+1)/3 exactly when T is in F", true, corpus, records,
                trees,
                [](const GraphRecord& r) -> std::optional<std::string> {
                  if (r.equality == r.in_family) return std::nullopt;
                  return std::string(r.equality ? "equality but not in F: " : "in F but strict: ") + fmt_counts(r);
                }),
  };
}

inline CheckResult unicyclic_bound_check(const std::vector<GraphRecord>& records, const std::string& corpus) {
  return run_check("unicyclic-lower-bound", "gamma_o(G) >= (n-l+s)/3 for every connected unicyclic graph", true,
                   corpus, records, [](const GraphRecord& r) { return is_class(r, CorpusClass::Unicyclic); },
                   [](const GraphRecord& r) -> std::optional<std::string> {
                     if (Rational(static_cast<std::int64_t>(r.gamma_o)) >= r.lower_bound) return std::nullopt;
                     return "bound violated: " + fmt_counts(r);
                   });
}

inline CheckResult characterization_check(const std::vector<GraphRecord>& records, const std::string& corpus) {
  return run_check("unicyclic-equality-iff-G", "gamma_o(G) = (n-l+s)/3 exactly when G is in the family G", true,
                   corpus, records, [](const GraphRecord& r) { return is_class(r, CorpusClass::Unicyclic); },
                   [](const GraphRecord& r) -> std::optional<std::string> {
                     if (r.equality == r.in_family) return std::nullopt;
                     return std::string(r.equality ? "equality but not in G: " : "in G but strict: ") +
                            fmt_counts(r);
                   });
}

/// Applies `bad` to every cycle vertex for every minimum GOA; reports the first offender.
inline std::optional<std::string> for_every_min_set(
    const GraphRecord& r, const std::function<std::optional<std::string>(VertexSet cycle, VertexSet d)>& bad) {
  const VertexSet cycle = cycle_vertices(r.graph);
  for (VertexSet d : r.minimum_sets) {
    if (auto why = bad(cycle, d)) return "D=" + d.to_string() + ": " + *why;
  }
  return std::nullopt;
}

inline std::vector<CheckResult> extremal_checks(const std::vector<GraphRecord>& records, const std::string& corpus) {
  auto extremal = [](const GraphRecord& r) {
    return is_class(r, CorpusClass::Unicyclic) && r.equality && r.all_min_goa_count.has_value();
  };
  std::vector<CheckResult> out;
  out.push_back(run_check("extremal-even-cycle", "an extremal unicyclic graph has an even cycle", true, corpus,
                          records, extremal, [](const GraphRecord& r) -> std::optional<std::string> {
                            if (r.cycle_length % 2 == 0) return std::nullopt;
                            return "cycle length " + std::to_string(r.cycle_length);
                          }));
  out.push_back(run_check(
      "extremal-cycle-outside-degree-two", "for every minimum GOA D, every vertex of C-D has degree two", true,
      corpus, records, extremal, [](const GraphRecord& r) {
        return for_every_min_set(r, [&](VertexSet cycle, VertexSet d) -> std::optional<std::string> {
          for (Vertex v : cycle - d) {
            if (degree(r.graph, v) != 2) {
              return "cycle vertex " + std::to_string(v) + " outside D has degree " +
                     std::to_string(degree(r.graph, v));
            }
          }
          return std::nullopt;
        });
      }));
  out.push_back(run_check(
      "extremal-cycle-inside-support", "for every minimum GOA D, every vertex of C and D is a support vertex", true,
      corpus, records, extremal, [](const GraphRecord& r) {
        const VertexSet support_set = supports(r.graph);
        return for_every_min_set(r, [&](VertexSet cycle, VertexSet d) -> std::optional<std::string> {
          for (Vertex v : cycle & d) {
            if (!support_set.contains(v)) return "cycle vertex " + std::to_string(v) + " in D is not a support";
          }
          return std::nullopt;
        });
      }));

  // Proof-internal properties of a cycle vertex x in D; recorded, not asserted.
  out.push_back(run_check(
      "cycle-support-no-support-neighbor", "every x in C and D has no support neighbor", false, corpus, records,
      extremal, [](const GraphRecord& r) {
        const VertexSet support_set = supports(r.graph);
        return for_every_min_set(r, [&](VertexSet cycle, VertexSet d) -> std::optional<std::string> {
          for (Vertex x : cycle & d) {
            if (r.graph.neighbors(x).intersects(support_set)) return "x=" + std::to_string(x);
          }
          return std::nullopt;
        });
      }));
  out.push_back(run_check(
      "cycle-support-offcycle-degree", "every off-cycle neighbor of x in C and D has degree at most two", false,
      corpus, records, extremal, [](const GraphRecord& r) {
        return for_every_min_set(r, [&](VertexSet cycle, VertexSet d) -> std::optional<std::string> {
          for (Vertex x : cycle & d) {
            for (Vertex y : r.graph.neighbors(x) - cycle) {
              if (degree(r.graph, y) > 2) return "x=" + std::to_string(x) + " y=" + std::to_string(y);
            }
          }
          return std::nullopt;
        });
      }));
  out.push_back(run_check(
      "cycle-support-distance-two", "every off-cycle vertex at distance two from x in C and D is a support", false,
      corpus, records, extremal, [](const GraphRecord& r) {
        const VertexSet support_set = supports(r.graph);
        return for_every_min_set(r, [&](VertexSet cycle, VertexSet d) -> std::optional<std::string> {
          for (Vertex x : cycle & d) {
            VertexSet second;
            for (Vertex y : r.graph.neighbors(x)) second |= r.graph.neighbors(y);
            second = second - r.graph.neighbors(x).with(x) - cycle;
            for (Vertex w : second) {
              if (!support_set.contains(w)) return "x=" + std::to_string(x) + " w=" + std::to_string(w);
            }
          }
          return std::nullopt;
        });
      }));
  return out;
}

inline CheckResult support_containment_check(const std::vector<GraphRecord>& records, const std::string& corpus) {
  return run_check("supports-in-minimum-goa", "some minimum GOA contains every support vertex", true, corpus, records,
                   [](const GraphRecord& r) { return r.all_min_goa_count.has_value(); },
                   [](const GraphRecord& r) -> std::optional<std::string> {
                     const VertexSet required = supports(r.graph);
                     for (VertexSet d : r.minimum_sets) {
                       if (required.subset_of(d)) return std::nullopt;
                     }
                     return "no minimum GOA contains supports " + required.to_string();
                   });
}

inline CheckResult bipartite_check(const std::vector<GraphRecord>& records, const std::string& corpus) {
  return run_check("bipartite-upper-bound", "gamma_o(G) <= (n-l+s)/2 for bipartite graphs", true, corpus, records,
                   [](const GraphRecord& r) { return is_bipartite(r.graph); },
                   [](const GraphRecord& r) -> std::optional<std::string> {
                     const Rational upper(reduced_order(r.graph), 2);
                     if (Rational(static_cast<std::int64_t>(r.gamma_o)) <= upper) return std::nullopt;
                     return "upper bound " + upper.to_string() + " exceeded: " + fmt_counts(r);
                   });
}

template <class Body>
VerificationReport timed_report(Body&& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report = body();
  report.runtime = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace detail

inline VerificationReport check_tree_bound(std::size_t max_order, VerifyConfig config = {}) {
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Tree, max_order, config);
    for (auto& c : detail::tree_checks(r.records, detail::describe(CorpusClass::Tree, 3, max_order))) {
      r.checks.push_back(std::move(c));
    }
    return r;
  });
}

inline VerificationReport check_unicyclic_bound(std::size_t max_order, VerifyConfig config = {}) {
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Unicyclic, max_order, config);
    r.checks.push_back(
        detail::unicyclic_bound_check(r.records, detail::describe(CorpusClass::Unicyclic, 3, max_order)));
    return r;
  });
}

inline VerificationReport check_equality_characterization(std::size_t max_order, VerifyConfig config = {}) {
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Unicyclic, max_order, config);
    r.checks.push_back(
        detail::characterization_check(r.records, detail::describe(CorpusClass::Unicyclic, 3, max_order)));
    return r;
  });
}

inline VerificationReport check_extremal_structure(std::size_t max_order, VerifyConfig config = {}) {
  config.max_all_min_sets = std::max(config.max_all_min_sets, max_order);
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Unicyclic, max_order, config);
    for (auto& c : detail::extremal_checks(r.records, "extremal " + detail::describe(CorpusClass::Unicyclic, 3,
                                                                                      max_order))) {
      r.checks.push_back(std::move(c));
    }
    return r;
  });
}

/// Tree and unicyclic corpora up to max_order.
inline VerificationReport check_support_containment(std::size_t max_order, VerifyConfig config = {}) {
  config.max_all_min_sets = std::max(config.max_all_min_sets, max_order);
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Tree, max_order, config);
    r.merge(detail::build_corpus(CorpusClass::Unicyclic, max_order, config));
    r.checks.push_back(detail::support_containment_check(r.records, "tree and unicyclic graphs of order 3.." +
                                                                std::to_string(max_order)));
    return r;
  });
}

inline VerificationReport check_bipartite_upper(std::size_t max_order, VerifyConfig config = {}) {
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Tree, max_order, config);
    r.merge(detail::build_corpus(CorpusClass::Unicyclic, max_order, config));
    r.checks.push_back(detail::bipartite_check(r.records, "bipartite tree and unicyclic graphs of order 3.." +
                                                              std::to_string(max_order)));
    return r;
  });
}

/// Every check over the configured corpora, sharing one solve per graph.
inline VerificationReport run_full(const VerifyConfig& config) {
  return detail::timed_report([&] {
    VerificationReport r = detail::build_corpus(CorpusClass::Tree, config.max_tree, config);
    r.merge(detail::build_corpus(CorpusClass::Unicyclic, config.max_unicyclic, config));
    const std::string trees = detail::describe(CorpusClass::Tree, 3, config.max_tree);
    const std::string unicyclic = detail::describe(CorpusClass::Unicyclic, 3, config.max_unicyclic);
    const std::string both = trees + " and " + unicyclic;
    for (auto& c : detail::record_checks(r.records, both)) r.checks.push_back(std::move(c));
    for (auto& c : detail::tree_checks(r.records, trees)) r.checks.push_back(std::move(c));
    r.checks.push_back(detail::unicyclic_bound_check(r.records, unicyclic));
    r.checks.push_back(detail::characterization_check(r.records, unicyclic));
    for (auto& c : detail::extremal_checks(r.records, "extremal " + unicyclic + " (order <= " +
                                                          std::to_string(config.max_all_min_sets) + ")")) {
      r.checks.push_back(std::move(c));
    }
    r.checks.push_back(detail::support_containment_check(
        r.records, both + " (order <= " + std::to_string(config.max_all_min_sets) + ")"));
    r.checks.push_back(detail::bipartite_check(r.records, "bipartite members of " + both));
    return r;
  });
}

// ---------------------------------------------------------------------------
// Serialization. Both forms are deterministic: no timings, no worker counts.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const VerificationReport& report, const VerifyConfig& config) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  j["version"] = kReportVersion;
  j["config"] = {{"max_tree", config.max_tree},
                 {"max_unicyclic", config.max_unicyclic},
                 {"max_all_min_sets", config.max_all_min_sets}};
  j["corpora"] = ordered_json::array();
  for (const auto& c : report.corpora) {
    ordered_json counts = ordered_json::object();
    std::size_t total = 0;
    for (const auto& [order, count] : c.counts) {
      counts[std::to_string(order)] = count;
      total += count;
    }
    j["corpora"].push_back({{"class", to_string(c.graph_class)},
                            {"min_order", c.min_order},
                            {"max_order", c.max_order},
                            {"counts", counts},
                            {"total", total}});
  }
  j["checks"] = ordered_json::array();
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"id", c.id},
                           {"claim", c.claim},
                           {"asserted", c.asserted},
                           {"corpus", c.corpus},
                           {"examined", c.examined},
                           {"passed", c.passed},
                           {"failed", c.failed()}});
    for (const auto& x : c.counterexamples) {
      j["counterexamples"].push_back(
          {{"check", x.check}, {"graph6", x.graph6}, {"details", x.details}, {"asserted", x.asserted}});
    }
  }
  j["violations"] = report.violations();
  j["status"] = report.has_violations() ? "fail" : "pass";
  return j;
}

inline std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "class,graph6,n,l,s,cycle_length,gamma_o,lower_bound,equality,in_family,all_min_goa_count\n";
  for (const auto& r : report.records) {
    out << to_string(r.graph_class) << ',' << r.graph6 << ',' << r.n << ',' << r.l << ',' << r.s << ','
        << r.cycle_length << ',' << r.gamma_o << ',' << r.lower_bound.to_string() << ','
        << (r.equality ? "true" : "false") << ',' << (r.in_family ? "true" : "false") << ',';
    if (r.all_min_goa_count) out << *r.all_min_goa_count;
    out << '\n';
  }
  return out.str();
}

/// Writes report.json and records.csv into `dir`, creating it if needed.
inline void write_artifacts(const VerificationReport& report, const VerifyConfig& config,
                            const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  auto write = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << text;
    if (!f) throw std::runtime_error("write failed for " + path.string());
  };
  write(dir / "report.json", to_json(report, config).dump(2) + "\n");
  write(dir / "records.csv", to_csv(report));
}

}  // namespace alliance
