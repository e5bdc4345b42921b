// alliance-lab: command-line front end for the alliance solver, families and verification harness.
//
// Exit status: 0 success, 1 a verified claim was violated, 2 bad input (parse, usage, domain,
// I/O), 3 an order cap was exceeded.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alliance/alliance_lab.hpp"

namespace {

using namespace alliance;
using nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCapability = 3;

struct Input {
  std::string graph6;
  Graph graph;
};

/// `source` is "-" for stdin, an existing file path, or an inline graph6 string. Each
/// non-empty line contributes its first whitespace-separated token.
std::vector<Input> read_graphs(const std::string& source) {
  std::vector<std::string> lines;
  auto slurp = [&](std::istream& in) {
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  };
  if (source == "-") {
    slurp(std::cin);
  } else if (std::filesystem::is_regular_file(source)) {
    std::ifstream f(source);
    if (!f) throw std::runtime_error("cannot open " + source);
    slurp(f);
  } else {
    lines.push_back(source);
  }
  std::vector<Input> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream tokens(lines[i]);
    std::string token;
    if (!(tokens >> token)) continue;
    try {
      out.push_back({token, decode_graph6(token)});
    } catch (const ParseError& e) {
      throw InputError("line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (out.empty()) throw InputError("no graphs in input");
  return out;
}

std::string join_sets(const std::vector<VertexSet>& sets) {
  std::string out;
  for (const auto& s : sets) out += (out.empty() ? "" : " ") + s.to_string();
  return out;
}

ordered_json set_json(VertexSet s) { return s.to_vector(); }

// ---------------------------------------------------------------------------

int cmd_stats(const std::string& source, const std::string& format) {
  for (const auto& [code, g] : read_graphs(source)) {
    const std::string cls = graph_class_name(g);
    std::optional<BoundReport> b;
    if (g.order() >= 3 && is_connected(g)) b = bounds(g);
    std::optional<std::size_t> cycle_length;
    if (is_unicyclic(g)) cycle_length = cycle_vertices(g).size();

    if (format == "json") {
      ordered_json j{{"graph6", code},
                     {"n", g.order()},
                     {"m", g.size()},
                     {"l", leaves(g).size()},
                     {"s", supports(g).size()},
                     {"class", cls},
                     {"bipartite", is_bipartite(g)}};
      j["cycle_length"] = cycle_length ? ordered_json(*cycle_length) : ordered_json(nullptr);
      if (b) {
        j["bounds"] = {
            {"tree_lower", {{"value", b->tree_lower.to_string()}, {"applies", b->tree_applies}}},
            {"unicyclic_lower", {{"value", b->unicyclic_lower.to_string()}, {"applies", b->unicyclic_applies}}},
            {"bipartite_upper", {{"value", b->bipartite_upper.to_string()}, {"applies", b->bipartite_applies}}}};
      } else {
        j["bounds"] = nullptr;
      }
      std::cout << j.dump() << '\n';
      continue;
    }
    std::cout << "graph = " << code << '\n'
              << "n = " << g.order() << '\n'
              << "m = " << g.size() << '\n'
              << "l = " << leaves(g).size() << '\n'
              << "s = " << supports(g).size() << '\n'
              << "class = " << cls << '\n'
              << "bipartite = " << (is_bipartite(g) ? "yes" : "no") << '\n';
    if (cycle_length) std::cout << "cycle_length = " << *cycle_length << '\n';
    if (b) {
      auto line = [](const char* name, const Rational& r, bool applies) {
        std::cout << name << " = " << r << (applies ? "" : " (not applicable)") << '\n';
      };
      line("tree_lower_bound", b->tree_lower, b->tree_applies);
      line("unicyclic_lower_bound", b->unicyclic_lower, b->unicyclic_applies);
      line("bipartite_upper_bound", b->bipartite_upper, b->bipartite_applies);
    } else {
      std::cout << "bounds = n/a\n";
    }
  }
  return 0;
}

int cmd_solve(const std::string& source, const std::string& format, bool all_sets, bool oracle,
              const Limits& limits) {
  const auto inputs = read_graphs(source);
  if (format == "csv") std::cout << "graph6,gamma_o,witness\n";
  for (const auto& [code, g] : inputs) {
    const SolveResult r =
        oracle ? gamma_o_brute_force(g, all_sets, limits) : gamma_o(g, SolveOptions{all_sets, true}, limits);
    if (format == "json") {
      ordered_json j{{"graph6", code}, {"gamma_o", r.value}, {"witness", set_json(r.witness)}};
      if (r.all_minimum_sets) {
        j["minimum_sets"] = ordered_json::array();
        for (VertexSet s : *r.all_minimum_sets) j["minimum_sets"].push_back(set_json(s));
      }
      std::cout << j.dump() << '\n';
    } else if (format == "csv") {
      std::string witness = r.witness.to_string();
      std::cout << code << ',' << r.value << ",\"" << witness << "\"\n";
    } else {
      std::cout << "graph = " << code << '\n' << "gamma_o = " << r.value << '\n' << "witness = " << r.witness << '\n';
      if (r.all_minimum_sets) {
        std::cout << "minimum_sets = " << r.all_minimum_sets->size() << '\n'
                  << "  " << join_sets(*r.all_minimum_sets) << '\n';
      }
    }
  }
  return 0;
}

void print_stats(const EnumerationStats& stats) {
  const ordered_json j{{"order", stats.order},
                       {"graph_count", stats.graph_count},
                       {"candidates", stats.candidates},
                       {"elapsed_ms", std::chrono::duration<double, std::milli>(stats.elapsed).count()}};
  std::cerr << j.dump() << '\n';
}

int cmd_enumerate(const std::string& cls, std::optional<std::size_t> order, std::optional<std::size_t> max_order,
                  bool stats, std::size_t jobs, const Limits& limits) {
  if (!order && !max_order) throw InputError("enumerate needs an order or --max-order");
  if (cls == "family-g") {
    const std::size_t cap = max_order ? *max_order : *order;
    for (const GMember& m : enumerate_g(cap, limits)) {
      if (order && m.graph.order() != *order) continue;
      std::cout << encode_graph6(m.graph) << '\t' << to_string(m.trace) << '\n';
    }
    return 0;
  }
  const bool trees = cls == "trees";
  const std::size_t lo = order ? *order : (trees ? 1 : 3);
  const std::size_t hi = order ? *order : *max_order;
  for (std::size_t n = lo; n <= hi; ++n) {
    const Enumeration e = trees ? enumerate_trees_with_stats(n, limits) : enumerate_unicyclic_with_stats(n, limits, jobs);
    for (const Graph& g : e.graphs) std::cout << encode_graph6(g) << '\n';
    if (stats) print_stats(e.stats);
  }
  return 0;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw InputError("bad star size '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_center_edges(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("center edge '" + item + "' must look like a-b");
    out.emplace_back(std::stoul(item.substr(0, dash)), std::stoul(item.substr(dash + 1)));
  }
  return out;
}

std::string spec_string(const StarForestSpec& spec) {
  std::string out = "F stars=";
  for (std::size_t i = 0; i < spec.star_sizes.size(); ++i) out += (i ? "," : "") + std::to_string(spec.star_sizes[i]);
  out += " edges=";
  for (std::size_t i = 0; i < spec.center_edges.size(); ++i) {
    out += (i ? "," : "") + std::to_string(spec.center_edges[i].first) + "-" + std::to_string(spec.center_edges[i].second);
  }
  return out;
}

struct FamilyGenArgs {
  std::optional<std::size_t> g1;
  std::string replay_trace;
  std::string stars;
  std::string center_edges;
  bool g0 = false;
  std::size_t attach_support = 0;
  std::size_t attach_star = 0;
};

int cmd_family_gen(const FamilyGenArgs& a) {
  if (!a.replay_trace.empty()) {
    const GBuildTrace trace = parse_trace(a.replay_trace);
    std::cout << encode_graph6(replay(trace)) << '\t' << to_string(trace) << '\n';
    return 0;
  }
  StarForestSpec forest;
  if (!a.stars.empty()) forest = {parse_sizes(a.stars), parse_center_edges(a.center_edges)};
  if (a.g0) {
    if (!a.g1 || a.stars.empty()) throw InputError("--g0 needs --g1 and --stars");
    const G0Spec spec{G1Spec{*a.g1}, a.attach_support, forest, a.attach_star};
    const GBuildTrace trace = g0_trace(spec);
    std::cout << encode_graph6(generate_g0(spec)) << '\t' << to_string(trace) << '\n';
    return 0;
  }
  if (a.g1) {
    const GBuildTrace trace{G1Spec{*a.g1}, {}};
    std::cout << encode_graph6(generate_g1(trace.base)) << '\t' << to_string(trace) << '\n';
    return 0;
  }
  if (!a.stars.empty()) {
    const FMember m = generate_f(forest);
    std::cout << encode_graph6(m.graph) << '\t' << spec_string(m.spec) << '\n';
    return 0;
  }
  throw InputError("family gen needs one of --g1, --replay, --stars");
}

int cmd_family_check(const std::string& source, const std::string& format, bool show_trace, const Limits& limits) {
  for (const auto& [code, g] : read_graphs(source)) {
    ordered_json j{{"graph6", code}};
    std::string provenance;
    bool member = false;
    if (is_tree(g)) {
      const FRecognition r = is_in_f(g);
      member = r.member;
      j["family"] = "F";
      if (r.spec) provenance = spec_string(*r.spec);
    } else if (is_unicyclic(g)) {
      const GRecognition r = is_in_g(g, limits);
      member = r.member;
      j["family"] = "G";
      if (r.trace) provenance = to_string(*r.trace);
    } else {
      throw DomainError(code + ": family check needs a tree or a connected unicyclic graph");
    }
    j["member"] = member;
    if (show_trace) j["trace"] = member ? ordered_json(provenance) : ordered_json(nullptr);
    if (format == "json") {
      std::cout << j.dump() << '\n';
    } else {
      std::cout << code << " in " << j["family"].get<std::string>() << " = " << (member ? "yes" : "no");
      if (show_trace && member) std::cout << "  [" << provenance << ']';
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_verify(VerifyConfig config, const std::string& format, const std::string& out_dir) {
  const VerificationReport report = run_full(config);
  if (!out_dir.empty()) write_artifacts(report, config, out_dir);
  if (format == "json") {
    std::cout << to_json(report, config).dump(2) << '\n';
  } else if (format == "csv") {
    std::cout << to_csv(report);
  } else {
    for (const auto& c : report.corpora) {
      std::cout << "corpus " << to_string(c.graph_class) << ':';
      for (const auto& [n, count] : c.counts) std::cout << ' ' << n << '=' << count;
      std::cout << '\n';
    }
    for (const auto& c : report.checks) {
      const char* tag = c.failed() == 0 ? "PASS" : (c.asserted ? "FAIL" : "NOTE");
      std::cout << tag << ' ' << c.id << ' ' << c.passed << '/' << c.examined << (c.asserted ? "" : " (informational)")
                << '\n';
      for (const auto& x : c.counterexamples) std::cout << "  " << x.graph6 << ": " << x.details << '\n';
    }
    std::cout << "violations = " << report.violations() << '\n';
  }
  std::cerr << "verify finished in " << std::chrono::duration<double>(report.runtime).count() << " s\n";
  return report.has_violations() ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact global offensive alliance solver and verification workbench"};
  app.require_subcommand(1);

  std::size_t jobs = 0;
  std::string format = "text";
  bool all_sets = false;
  bool show_trace = false;
  std::string source;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> choices) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(choices)));
  };

  auto* stats = app.add_subcommand("stats", "Order, leaves, supports, class, cycle length and bounds");
  stats->add_option("input", source, "graph6 string, file of graph6 lines, or - for stdin")->required();
  add_format(stats, {"text", "json"});

  bool oracle = false;
  auto* solve = app.add_subcommand("solve", "Exact gamma_o with a minimum witness");
  solve->add_option("input", source, "graph6 string, file of graph6 lines, or - for stdin")->required();
  solve->add_flag("--all-min-sets", all_sets, "List every minimum global offensive alliance");
  solve->add_flag("--oracle", oracle, "Use the exhaustive subset scan instead of branch and bound");
  add_format(solve, {"text", "json", "csv"});

  std::string cls;
  std::optional<std::size_t> order;
  std::optional<std::size_t> max_order;
  bool want_stats = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream graph6 for a graph class");
  enumerate->add_option("class", cls, "trees | unicyclic | family-g")
      ->required()
      ->check(CLI::IsMember({"trees", "unicyclic", "family-g"}));
  enumerate->add_option("n", order, "Exact order");
  enumerate->add_option("--max-order", max_order, "All orders up to this one");
  enumerate->add_flag("--stats", want_stats, "Per-order statistics as JSON on stderr");
  enumerate->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  auto* family = app.add_subcommand("family", "Extremal family generators and recognizers");
  family->require_subcommand(1);
  FamilyGenArgs gen_args;
  auto* gen = family->add_subcommand("gen", "Generate a family member (graph6 and trace)");
  gen->add_option("--g1", gen_args.g1, "Even cycle length k of G1(k)");
  gen->add_option("--replay", gen_args.replay_trace, "Replay a G build trace, e.g. \"G1 k=4; O1 @v0\"");
  gen->add_option("--stars", gen_args.stars, "Star sizes t1,t2,... for F (or the G0 star system)");
  gen->add_option("--center-edges", gen_args.center_edges, "Center tree edges a-b,c-d,... (star indices)");
  gen->add_flag("--g0", gen_args.g0, "Join G1 to the star system through a subdivided bridge");
  gen->add_option("--attach-support", gen_args.attach_support, "G0: index i of cycle support x_{2i+1}");
  gen->add_option("--attach-star", gen_args.attach_star, "G0: star whose center takes the bridge");
  gen->add_flag("--trace", show_trace, "Accepted for symmetry; gen always prints the trace");
  auto* check = family->add_subcommand("check", "Membership of a tree in F or a unicyclic graph in G");
  check->add_option("input", source, "graph6 string, file of graph6 lines, or - for stdin")->required();
  check->add_flag("--trace", show_trace, "Print the recovered construction");
  add_format(check, {"text", "json"});

  VerifyConfig config;
  std::optional<std::size_t> verify_max;
  std::string out_dir;
  auto* verify = app.add_subcommand("verify", "Check every claim over exhaustive corpora");
  verify->add_option("--max-order", verify_max, "Shorthand for --max-tree and --max-unicyclic");
  verify->add_option("--max-tree", config.max_tree, "Largest tree order")->capture_default_str();
  verify->add_option("--max-unicyclic", config.max_unicyclic, "Largest unicyclic order")->capture_default_str();
  verify->add_option("--max-all-min-sets", config.max_all_min_sets, "Largest order with all-minimum-set checks")
      ->capture_default_str();
  verify->add_option("--out", out_dir, "Directory for report.json and records.csv");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  add_format(verify, {"text", "json", "csv"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (*stats) return cmd_stats(source, format);
    if (*solve) return cmd_solve(source, format, all_sets, oracle, limits);
    if (*enumerate) return cmd_enumerate(cls, order, max_order, want_stats, jobs, limits);
    if (*gen) return cmd_family_gen(gen_args);
    if (*check) return cmd_family_check(source, format, show_trace, limits);
    if (*verify) {
      if (verify_max) config.max_tree = config.max_unicyclic = *verify_max;
      config.jobs = jobs;
      config.limits = limits;
      return cmd_verify(config, format, out_dir);
    }
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapability;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
