#include <gtest/gtest.h>

#include <map>

#include "ulrich/errors.hpp"
#include "ulrich/graph_catalog.hpp"
#include "ulrich/report.hpp"

using namespace ulrich;

namespace {

const ReportRecord& row(const std::vector<ReportRecord>& rows, const std::string& tag) {
  for (const auto& r : rows) {
    if (r.tag == tag) return r;
  }
  throw std::out_of_range(tag);
}

}  // namespace

TEST(Judge, Semantics) {
  ReportRecord r;
  r.judge();
  EXPECT_EQ(r.status, RecordStatus::Skip);
  r.computed.residue = 2;
  r.expected.residue = 2;
  r.judge();
  EXPECT_EQ(r.status, RecordStatus::Pass);
  r.expected.nearly_gorenstein = true;
  r.judge();
  EXPECT_EQ(r.status, RecordStatus::Fail);
  ReportRecord b;
  b.computed.chain_count = 3;
  b.chain_count_at_most = 2;
  b.judge();
  EXPECT_EQ(b.status, RecordStatus::Fail);
  b.computed.chain_count = 2;
  b.judge();
  EXPECT_EQ(b.status, RecordStatus::Pass);
}

TEST(ResidueTable, PrintedRows) {
  auto rows = residue_table(4);
  EXPECT_EQ(rows.size(), 72u);
  EXPECT_EQ(*row(rows, "A:1,2,3").computed.residue, 2u);
  EXPECT_EQ(*row(rows, "F:4").computed.residue, 3u);
  EXPECT_EQ(*row(rows, "G2").computed.residue, 2u);
  for (const auto& r : rows) EXPECT_EQ(r.status, RecordStatus::Pass) << r.tag;
}

TEST(ResidueTable, BothBranchesOfEveryMinimum) {
  // (family, which argument of the minimum is strictly smaller) -> rows.
  std::map<std::pair<Family, int>, int> seen;
  for (const auto& tag : rtp_grid(4)) {
    const auto& p = tag.params;
    int a = 0, b = 0;
    switch (tag.family) {
      case Family::B:
        a = (p[1] + 1) / 2, b = p[0] + 1;
        break;
      case Family::C:
      case Family::D:
        a = 2, b = p[0] + 1;
        break;
      case Family::F:
        a = 3, b = p[0] + 1;
        break;
      default:
        continue;
    }
    if (a != b) ++seen[{tag.family, a < b ? 0 : 1}];
  }
  for (Family f : {Family::B, Family::C, Family::D, Family::F}) {
    EXPECT_GE((seen[{f, 0}]), 1);
    EXPECT_GE((seen[{f, 1}]), 1);
  }
}

TEST(Classify, Examples) {
  auto a = classify_report(FamilyTag::parse("A:1,2,3"));
  EXPECT_EQ(*a.record.computed.ulrich_count, 2u);
  EXPECT_EQ(a.record.status, RecordStatus::Pass);
  ASSERT_TRUE(a.beyond.has_value());
  EXPECT_EQ(a.beyond->verdict, Verdict::TraceNotContained);

  auto ex = classify_report(FamilyTag::parse("EX-5.2"));
  EXPECT_EQ(*ex.record.computed.ulrich_count, 3u);
  EXPECT_EQ(ex.record.note, "non-rational, p_g=1");
  EXPECT_EQ(ex.record.status, RecordStatus::Pass);

  auto e8 = classify_report(FamilyTag::parse("RDP-E8"));
  EXPECT_EQ(*e8.record.computed.ulrich_count, 2u);
  EXPECT_TRUE(e8.trace.empty());
  EXPECT_EQ(e8.record.status, RecordStatus::Pass);

  EXPECT_THROW(classify_report(FamilyTag::parse("EX-5.3")), UnsupportedType);
}

TEST(Classify, CertificateJson) {
  auto a = classify_report(FamilyTag::parse("A:1,2,3"));
  auto doc = to_json(a.certificates[1], a.record.tag);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"tag", "ideal", "reduction", "verdict", "e0", "mu", "len", "stable", "good",
                                            "freeTest", "containsTrace"}));
  EXPECT_EQ(doc["verdict"], "ulrich");
  EXPECT_EQ(doc["e0"], 6);
  EXPECT_EQ(to_json(a.certificates[1], a.record.tag).dump(), doc.dump());
}

TEST(Sweep, Examples) {
  auto g10 = quotient_sweep_row("G10:2");
  EXPECT_EQ(*g10.computed.multiplicity, 4u);
  EXPECT_EQ(*g10.computed.chain_count, 1u);
  EXPECT_EQ(g10.status, RecordStatus::Pass);
  auto cyc = quotient_sweep_row("cyclic:2,3,2");
  EXPECT_TRUE(unique_ulrich_filter(graph_catalog("cyclic:2,3,2")));
  EXPECT_EQ(cyc.status, RecordStatus::Pass);
  auto g11 = quotient_sweep_row("G11:2");
  EXPECT_EQ(*g11.computed.multiplicity, 3u);
  EXPECT_EQ(*g11.computed.chain_count, 2u);
  EXPECT_EQ(g11.status, RecordStatus::Pass);
}

TEST(Sweep, MultiplicityAtLeastFourGivesOnlyZ0) {
  for (const auto& r : quotient_sweep(4, 4, 3)) {
    if (*r.computed.multiplicity >= 4) EXPECT_EQ(r.status, RecordStatus::Pass) << r.tag;
    if (*r.computed.multiplicity == 3) EXPECT_EQ(r.status, RecordStatus::Pass) << r.tag;
  }
}

TEST(CrossCheck, PublishedPairs) {
  for (auto [alg, graph] : {std::pair<const char*, const char*>{"A:1,2,3", "G7:3"}, {"H:5", ""}, {"G1", ""}}) {
    auto c = cross_check(alg, graph);
    EXPECT_TRUE(c.agree) << alg;
    EXPECT_EQ(c.algebra.residue, 2u) << alg;
    EXPECT_EQ(c.graph.ulrich_count, 2u) << alg;
  }
}

TEST(GraphCommand, Examples) {
  auto G = graph_catalog("G10:2");
  EXPECT_EQ(graph_command(G, "z0").dump(), R"({"E1":1,"E2":1,"E0":2,"E3":1,"F":1})");
  EXPECT_EQ(graph_command(G, "stats", R"({"E1":1,"E2":2,"E0":2,"E3":1,"F":1})").dump(), R"({"len":2,"e0":7,"mu":5})");
  auto single = DualGraph::from_json(R"({"vertices":[{"id":"E0","weight":-3}],"edges":[]})");
  EXPECT_EQ(graph_command(single, "filter").dump(), "true");
  EXPECT_EQ(graph_command(G, "pa").dump(), "0");
  EXPECT_EQ(graph_command(G, "chains").dump(), graph_command(G, "chains").dump());
  EXPECT_THROW(graph_command(G, "bogus"), ParseError);
}
