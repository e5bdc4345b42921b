#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "alliance/families.hpp"
#include "alliance/graph6.hpp"
#include "alliance/verification.hpp"

namespace alliance {
namespace {

const GraphRecord* find_record(const VerificationReport& r, const Graph& g) {
  const std::string code = encode_graph6(canonical_graph(g));
  for (const auto& rec : r.records) {
    if (rec.graph6 == code) return &rec;
  }
  return nullptr;
}

void expect_tallies_consistent(const VerificationReport& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.passed + c.failed(), c.examined) << c.id;
  }
}

TEST(Verification, RecordExamples) {
  const VerificationReport r = check_equality_characterization(9);
  const GraphRecord* g16 = find_record(r, generate_g1(G1Spec{6}));
  ASSERT_NE(g16, nullptr);
  EXPECT_TRUE(g16->equality);
  EXPECT_TRUE(g16->in_family);
  EXPECT_EQ(g16->gamma_o, 3u);

  const GraphRecord* c6 = find_record(r, make::cycle(6));
  ASSERT_NE(c6, nullptr);
  EXPECT_FALSE(c6->equality);
  EXPECT_FALSE(c6->in_family);
  EXPECT_EQ(c6->gamma_o, 3u);
  EXPECT_EQ(c6->cycle_length, 6u);

  const GraphRecord* paw = find_record(r, Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
  ASSERT_NE(paw, nullptr);
  EXPECT_EQ(paw->lower_bound, Rational(4, 3));
  EXPECT_EQ(paw->gamma_o, 2u);
  EXPECT_FALSE(paw->equality);
  EXPECT_FALSE(paw->in_family);
  EXPECT_FALSE(r.has_violations());
}

TEST(Verification, SmallestCorpusIsTheTriangle) {
  const VerificationReport r = check_unicyclic_bound(3);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records.front().graph6, encode_graph6(make::cycle(3)));
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_EQ(r.checks.front().examined, 1u);
  EXPECT_FALSE(r.has_violations());
}

TEST(Verification, EachCheckEntryPointPasses) {
  const std::vector<VerificationReport> reports{check_tree_bound(10),         check_unicyclic_bound(10),
                                                check_equality_characterization(10), check_extremal_structure(9),
                                                check_support_containment(8),       check_bipartite_upper(9)};
  for (const auto& r : reports) {
    EXPECT_FALSE(r.has_violations());
    EXPECT_FALSE(r.checks.empty());
    expect_tallies_consistent(r);
  }
  EXPECT_EQ(reports[0].corpora.front().counts.at(10), 106u);
  EXPECT_EQ(reports[1].corpora.front().counts.at(10), 657u);
}

TEST(Verification, BipartiteBoundTightOnC4AndSkipsOddCycles) {
  const VerificationReport r = check_bipartite_upper(4);
  const GraphRecord* c4 = find_record(r, make::cycle(4));
  ASSERT_NE(c4, nullptr);
  EXPECT_EQ(Rational(static_cast<std::int64_t>(c4->gamma_o)), Rational(4, 2));
  const CheckResult* check = r.find("bipartite-upper-bound");
  ASSERT_NE(check, nullptr);
  // Trees P3, P4, K1,3 and the cycle C4; C3 and the paw are not bipartite.
  EXPECT_EQ(check->examined, 4u);
  EXPECT_EQ(check->passed, 4u);
}

TEST(Verification, FullRunIsCompleteAndConsistent) {
  VerifyConfig config;
  config.max_tree = 9;
  config.max_unicyclic = 9;
  config.max_all_min_sets = 8;
  const VerificationReport r = run_full(config);
  EXPECT_FALSE(r.has_violations());
  expect_tallies_consistent(r);
  std::size_t trees = 0;
  std::size_t unicyclic = 0;
  for (const auto& rec : r.records) {
    (rec.graph_class == CorpusClass::Tree ? trees : unicyclic) += 1;
    const std::int64_t base = static_cast<std::int64_t>(rec.n - rec.l + rec.s);
    const std::int64_t target = rec.graph_class == CorpusClass::Tree ? base + 1 : base;
    EXPECT_EQ(rec.equality, 3 * static_cast<std::int64_t>(rec.gamma_o) == target) << rec.graph6;
    EXPECT_EQ(rec.all_min_goa_count.has_value(), rec.n <= 8) << rec.graph6;
    EXPECT_EQ(rec.gamma_o, gamma_o_brute_force(rec.graph).value);
  }
  EXPECT_EQ(trees, 1u + 2 + 3 + 6 + 11 + 23 + 47);
  EXPECT_EQ(unicyclic, 1u + 2 + 5 + 13 + 33 + 89 + 240);
  const CheckResult* record_check = r.find("record-consistency");
  ASSERT_NE(record_check, nullptr);
  EXPECT_EQ(record_check->examined, trees + unicyclic);
  const CheckResult* even = r.find("extremal-even-cycle");
  ASSERT_NE(even, nullptr);
  EXPECT_GT(even->examined, 0u);
  for (const char* id : {"cycle-support-no-support-neighbor", "cycle-support-offcycle-degree",
                         "cycle-support-distance-two"}) {
    const CheckResult* info = r.find(id);
    ASSERT_NE(info, nullptr) << id;
    EXPECT_FALSE(info->asserted);
  }
}

TEST(Verification, SerializationIsDeterministicAcrossWorkerCounts) {
  VerifyConfig a;
  a.max_tree = 8;
  a.max_unicyclic = 8;
  a.jobs = 1;
  VerifyConfig b = a;
  b.jobs = 3;
  const VerificationReport ra = run_full(a);
  const VerificationReport rb = run_full(b);
  EXPECT_EQ(to_json(ra, a).dump(2), to_json(rb, b).dump(2));
  EXPECT_EQ(to_csv(ra), to_csv(rb));

  const nlohmann::ordered_json j = to_json(ra, a);
  EXPECT_EQ(j["schema"], kReportSchema);
  EXPECT_EQ(j["version"], kReportVersion);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["violations"], 0);
  EXPECT_FALSE(j["config"].contains("jobs"));
}

TEST(Verification, ArtifactsAreWritten) {
  const auto dir = std::filesystem::temp_directory_path() / "alliance-lab-verification-test";
  std::filesystem::remove_all(dir);
  VerifyConfig config;
  config.max_tree = 6;
  config.max_unicyclic = 6;
  const VerificationReport r = run_full(config);
  write_artifacts(r, config, dir);
  std::ifstream csv(dir / "records.csv");
  std::stringstream text;
  text << csv.rdbuf();
  EXPECT_EQ(text.str(), to_csv(r));
  EXPECT_TRUE(std::filesystem::exists(dir / "report.json"));
  std::filesystem::remove_all(dir);

  const auto blocked = std::filesystem::temp_directory_path() / "alliance-lab-blocked-file";
  std::ofstream(blocked) << "x";
  EXPECT_THROW(write_artifacts(r, config, blocked / "sub"), std::runtime_error);
  std::filesystem::remove(blocked);
}

}  // namespace
}  // namespace alliance
