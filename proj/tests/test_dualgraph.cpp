#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "graph_oracles.hpp"
#include "ulrich/dualgraph.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/graph_catalog.hpp"
#include "ulrich/presentations.hpp"

using namespace ulrich;

namespace {

DualGraph single(int weight) { return DualGraph({{"E1", weight}}, {}); }

Cycle by_id(const DualGraph& G, std::initializer_list<std::pair<const char*, int>> coeffs) {
  Cycle Z(G.size(), 0);
  for (const auto& [id, c] : coeffs) Z[G.index_of(id)] = c;
  return Z;
}

Cycle ex53_J(const DualGraph& G) { return by_id(G, {{"E1", 1}, {"E2", 2}, {"E0", 2}, {"E3", 1}, {"F", 1}}); }

}  // namespace

TEST(DualGraph, RejectsBadInput) {
  EXPECT_THROW(DualGraph({{"a", -1}}, {}), InvariantViolation);
  EXPECT_THROW(DualGraph({{"a", -2}, {"a", -2}}, {}), InvariantViolation);
  EXPECT_THROW(DualGraph({{"a", -2}, {"b", -2}}, {}), InvariantViolation);
  EXPECT_THROW(DualGraph({{"a", -2}, {"b", -2}}, {{"a", "b"}, {"b", "a"}}), InvariantViolation);
  EXPECT_THROW(DualGraph({{"a", -2}}, {{"a", "a"}}), InvariantViolation);
  EXPECT_THROW(DualGraph({{"a", -2}}, {{"a", "z"}}), InvariantViolation);
  // Affine D4: a -2 centre with four -2 leaves is only semi-definite.
  EXPECT_THROW(DualGraph({{"c", -2}, {"a", -2}, {"b", -2}, {"d", -2}, {"e", -2}},
                         {{"c", "a"}, {"c", "b"}, {"c", "d"}, {"c", "e"}}),
               InvariantViolation);
}

TEST(DualGraph, JsonRoundTrip) {
  auto G = graph_catalog("G7:3");
  auto H = DualGraph::from_json(G.to_json());
  EXPECT_EQ(H.to_json(), G.to_json());
  auto Z = fundamental_cycle(G);
  EXPECT_EQ(cycle_from_json(G, cycle_to_json(G, Z)), Z);
  auto small = DualGraph::from_json(R"({"vertices":[{"id":"E0","weight":-3}],"edges":[]})");
  EXPECT_EQ(small.size(), 1u);
  EXPECT_EQ(small.b(0), 3);
  EXPECT_THROW(DualGraph::from_json("{"), ParseError);
  EXPECT_THROW(DualGraph::from_json(R"({"vertices":[{"id":"E0"}],"edges":[]})"), ParseError);
  EXPECT_THROW(cycle_from_json(G, R"({"nope":1})"), std::exception);
}

TEST(Intersection, Basics) {
  auto G = single(-3);
  EXPECT_EQ(intersection_pairing(G, {1}, {1}), -3);
  auto P = graph_catalog("RDP-A:2");
  EXPECT_EQ(intersection_pairing(P, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(P.intersection(0, 1), 1);
  EXPECT_THROW(intersection_pairing(P, {1}, {1, 0}), ShapeError);
}

TEST(Intersection, Ex53CycleJ) {
  auto G = graph_catalog("EX-5.3");
  auto Z = ex53_J(G);
  EXPECT_EQ(intersection_pairing(G, Z, Z), -7);
  EXPECT_EQ(canonical_pairing(G, Z), 3);
}

TEST(Intersection, AgreesWithDenseMatrix) {
  std::mt19937 rng(7);
  for (const char* tag : {"EX-5.3", "F:2", "G2", "T22:3,2,4", "cyclic:2,5,3"}) {
    auto G = graph_catalog(tag);
    auto M = oracle::intersection_matrix(G);
    std::uniform_int_distribution<int> d(0, 4);
    for (int round = 0; round < 20; ++round) {
      Cycle Y(G.size()), Z(G.size());
      for (auto& c : Y) c = d(rng);
      for (auto& c : Z) c = d(rng);
      EXPECT_EQ(intersection_pairing(G, Y, Z), oracle::dot(M, Y, Z)) << tag;
      EXPECT_EQ(intersection_pairing(G, Y, Z), intersection_pairing(G, Z, Y)) << tag;
    }
  }
}

TEST(FundamentalCycle, PrintedExamples) {
  auto G7 = graph_catalog("G7:3");
  EXPECT_EQ(G7.size(), 7u);
  EXPECT_EQ(G7.b(G7.index_of("E0")), 3);
  EXPECT_EQ(fundamental_cycle(G7), Cycle(7, 1));
  auto G10 = graph_catalog("G10:2");
  EXPECT_EQ(cycle_to_json(G10, fundamental_cycle(G10)), R"({"E1":1,"E2":1,"E0":2,"E3":1,"F":1})");
  EXPECT_EQ(fundamental_cycle(single(-5)), Cycle{1});
}

TEST(FundamentalCycle, TriplePointFigureLabels) {
  struct Case {
    const char* tag;
    const char* z0;
  };
  const Case cases[] = {
      {"A:1,2,3", R"({"E1":1,"E2":1,"E0":1,"E3":1,"E4":1,"E5":1,"E6":1})"},
      {"B:1,4", R"({"E1":1,"E0":1,"E2":2,"E3":1,"E4":2,"E5":1})"},
      {"C:1,5", R"({"E1":1,"E0":1,"E2":2,"E3":2,"E4":2,"E5":1,"E6":1})"},
      {"D:1", R"({"E1":1,"E0":1,"E2":2,"E3":3,"E4":2,"E5":2,"E6":1})"},
      {"F:2", R"({"E1":1,"E2":1,"E0":1,"E3":2,"E4":3,"E5":4,"E6":2,"E7":3,"E8":2})"},
      {"G1", R"({"E0":1,"E1":3,"E2":4,"E3":2,"E4":3,"E5":2,"E6":1})"},
      {"G2", R"({"E0":1,"E1":3,"E2":5,"E3":3,"E4":4,"E5":3,"E6":2,"E7":1})"},
      {"G3", R"({"E0":1,"E1":3,"E2":4,"E3":5,"E4":6,"E5":3,"E6":4,"E7":2})"},
  };
  for (const auto& c : cases) {
    auto G = graph_catalog(c.tag);
    EXPECT_EQ(cycle_to_json(G, fundamental_cycle(G)), c.z0) << c.tag;
  }
}

TEST(FundamentalCycle, HGraphMainChain) {
  auto G = graph_catalog("H:6");
  EXPECT_EQ(G.size(), 7u);
  EXPECT_EQ(G.b(G.index_of("E0")), 3);
  EXPECT_EQ(G.neighbors(G.index_of("E0")).size(), 1u);
  EXPECT_EQ(cycle_to_json(G, fundamental_cycle(G)), R"({"E1":1,"E2":2,"E3":3,"E4":3,"E0":1,"E5":2,"E6":1})");
}

TEST(FundamentalCycle, MatchesBruteForceMinimum) {
  for (const char* tag : {"G7:3", "EX-5.3", "RDP-D:5", "RDP-E6", "cyclic:3,2,2", "T22:2,3", "B:0,4", "H:5"}) {
    auto G = graph_catalog(tag);
    auto Z0 = fundamental_cycle(G);
    int bound = 2 * *std::max_element(Z0.begin(), Z0.end());
    if (G.size() > 6) bound = *std::max_element(Z0.begin(), Z0.end());
    auto brute = oracle::minimal_antinef(G, bound);
    ASSERT_TRUE(brute.has_value()) << tag;
    EXPECT_EQ(*brute, Z0) << tag;
  }
}

TEST(FundamentalCycle, IndependentOfVertexOrder) {
  std::mt19937 rng(11);
  for (const char* tag : {"F:1", "EX-5.3", "G13:3", "T22:4,2,3", "RDP-E8"}) {
    auto G = graph_catalog(tag);
    auto Z0 = fundamental_cycle(G);
    std::vector<std::size_t> perm(G.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 5; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      auto P = G.permuted(perm);
      auto W = fundamental_cycle(P);
      for (std::size_t k = 0; k < perm.size(); ++k) EXPECT_EQ(W[k], Z0[perm[k]]) << tag;
    }
  }
}

TEST(AntiNef, Cases) {
  auto P = graph_catalog("RDP-A:2");
  EXPECT_FALSE(is_antinef(P, {1, 0}));
  EXPECT_TRUE(is_antinef(P, fundamental_cycle(P)));
  auto G = graph_catalog("G7:3");
  EXPECT_TRUE(is_antinef(G, by_id(G, {{"E1", 1}, {"E2", 2}, {"E3", 2}, {"E0", 2}, {"E4", 1}, {"E5", 2}, {"E6", 1}})));
}

TEST(Genus, Cases) {
  EXPECT_EQ(canonical_numbers(graph_catalog("G7:3")), (std::vector<int>{0, 0, 0, 1, 0, 0, 0}));
  auto G = graph_catalog("EX-5.3");
  for (std::size_t i = 0; i < G.size(); ++i) {
    Cycle E(G.size(), 0);
    E[i] = 1;
    EXPECT_EQ(arithmetic_genus(G, E), 0);
  }
  auto P = graph_catalog("RDP-A:2");
  EXPECT_EQ(arithmetic_genus(P, {1, 1}), 0);
  EXPECT_EQ(arithmetic_genus(P, {2, 2}), -3);
  EXPECT_THROW(arithmetic_genus(P, {0, 0}), PreconditionError);
}

TEST(Genus, CatalogGraphsAreRational) {
  for (const auto& t : rtp_grid(3)) EXPECT_TRUE(rationality_check(graph_catalog(t.to_string()))) << t.to_string();
  for (const auto& t : quotient_sweep_tags(4, 3, 2)) EXPECT_TRUE(rationality_check(graph_catalog(t))) << t;
  for (const char* t : {"RDP-A:5", "RDP-D:6", "RDP-E6", "RDP-E7", "RDP-E8"}) EXPECT_TRUE(rationality_check(graph_catalog(t)));
  // A -2 centre with four leaves, one of them -3: p_a(Z0) = 1.
  DualGraph elliptic({{"c", -2}, {"a", -2}, {"b", -2}, {"d", -2}, {"e", -3}},
                     {{"c", "a"}, {"c", "b"}, {"c", "d"}, {"c", "e"}});
  EXPECT_EQ(arithmetic_genus(elliptic, fundamental_cycle(elliptic)), 1);
  EXPECT_FALSE(rationality_check(elliptic));
  EXPECT_THROW(graph_multiplicity(elliptic), PreconditionError);
}

TEST(Invariants, Ex53CycleJ) {
  auto G = graph_catalog("EX-5.3");
  auto Z = ex53_J(G);
  EXPECT_EQ(cycle_length(G, Z), 2);
  EXPECT_EQ(graph_multiplicity(G), 4);
  EXPECT_EQ(-intersection_pairing(G, Z, Z), 7);
  EXPECT_EQ(cycle_mu(G, Z), 5);
}

TEST(Invariants, TriplePointsMatchAlgebra) {
  for (const auto& t : rtp_grid(2)) {
    auto G = graph_catalog(t.to_string());
    auto Z0 = fundamental_cycle(G);
    EXPECT_EQ(graph_multiplicity(G), 3) << t.to_string();
    EXPECT_EQ(cycle_mu(G, Z0), 4) << t.to_string();
    EXPECT_EQ(cycle_length(G, Z0), 1) << t.to_string();
  }
}

TEST(Invariants, Preconditions) {
  auto P = graph_catalog("RDP-A:2");
  EXPECT_THROW(cycle_length(P, {1, 0}), PreconditionError);
  EXPECT_THROW(cycle_mu(P, {0, 0}), PreconditionError);
}

TEST(Filter, Cases) {
  EXPECT_TRUE(unique_ulrich_filter(graph_catalog("G10:2")));
  EXPECT_FALSE(unique_ulrich_filter(graph_catalog("G7:3")));
  EXPECT_TRUE(unique_ulrich_filter(graph_catalog("cyclic:2,3,2")));
  EXPECT_FALSE(unique_ulrich_filter(graph_catalog("RDP-E6")));
}

TEST(Filter, SupportCandidates) {
  EXPECT_TRUE(ulrich_support_candidates(graph_catalog("G10:2")).empty());
  auto G = graph_catalog("G7:3");
  auto sets = ulrich_support_candidates(G);
  auto Z0 = fundamental_cycle(G);
  Cycle Y1 = by_id(G, {{"E1", 0}, {"E2", 1}, {"E3", 1}, {"E0", 1}, {"E4", 0}, {"E5", 1}, {"E6", 0}});
  auto chains = enumerate_ulrich_chains(G);
  ASSERT_EQ(chains.chains.size(), 2u);
  EXPECT_EQ(chains.chains[1].steps[0], Y1);
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < Y1.size(); ++i) {
    if (Y1[i] > 0) supp.push_back(i);
  }
  EXPECT_NE(std::find(sets.begin(), sets.end(), supp), sets.end());
  for (const auto& s : sets) {
    EXPECT_NE(std::find(s.begin(), s.end(), G.index_of("E0")), s.end());
  }
  // All -2: the lower bound is empty, so every candidate lies in {Z0.E = 0}.
  auto A = graph_catalog("RDP-A:4");
  auto p = pairing_with_vertices(A, fundamental_cycle(A));
  for (const auto& s : ulrich_support_candidates(A)) {
    for (std::size_t v : s) EXPECT_EQ(p[v], 0);
  }
  EXPECT_EQ(ulrich_support_candidates(A).size(), 3u);
}

TEST(Chains, Gamma7ThreeHasTwoChains) {
  auto G = graph_catalog("G7:3");
  auto e = enumerate_ulrich_chains(G);
  ASSERT_EQ(e.chains.size(), 2u);
  EXPECT_FALSE(e.truncated);
  EXPECT_EQ(e.chains[0].cycles.back(), fundamental_cycle(G));
  EXPECT_EQ(cycle_to_json(G, e.chains[1].cycles.back()),
            R"({"E1":1,"E2":2,"E3":2,"E0":2,"E4":1,"E5":2,"E6":1})");
}

TEST(Chains, CountsOnPrintedCases) {
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("A:2,2,2")).chains.size(), 3u);
  auto G = graph_catalog("G10:2");
  auto e = enumerate_ulrich_chains(G);
  ASSERT_EQ(e.chains.size(), 1u);
  EXPECT_EQ(e.chains[0].cycles.back(), fundamental_cycle(G));
}

TEST(Chains, MatchResidueOnGrid) {
  for (const auto& t : rtp_grid(3)) {
    auto R = instantiate(t);
    auto chains = enumerate_ulrich_chains(graph_catalog(t.to_string()));
    EXPECT_EQ(chains.chains.size(), residue(R)) << t.to_string();
    // The last Ulrich ideal is the trace ideal, of colength res.
    EXPECT_EQ(static_cast<std::uint64_t>(cycle_length(graph_catalog(t.to_string()), chains.chains.back().cycles.back())),
              residue(R))
        << t.to_string();
  }
}

TEST(Chains, HFamilyFollowsResidue) {
  for (int k = 2; k <= 4; ++k) {
    for (int n : {3 * k - 1, 3 * k, 3 * k + 1}) {
      EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("H:" + std::to_string(n))).chains.size(),
                static_cast<std::size_t>(k))
          << n;
    }
  }
}

TEST(Chains, RdpCountsMatchClassification) {
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-A:5")).chains.size(), 3u);
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-A:6")).chains.size(), 3u);
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-D:6")).chains.size(), 5u);
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-D:7")).chains.size(), 4u);
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-E6")).chains.size(), 2u);
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-E7")).chains.size(), 3u);
  EXPECT_EQ(enumerate_ulrich_chains(graph_catalog("RDP-E8")).chains.size(), 2u);
}

TEST(Chains, StrictlyIncreasingAndDistinct) {
  for (const char* tag : {"F:3", "A:2,3,4", "H:10", "RDP-D:8"}) {
    auto G = graph_catalog(tag);
    auto e = enumerate_ulrich_chains(G);
    std::set<Cycle> finals;
    for (const auto& ch : e.chains) {
      EXPECT_TRUE(finals.insert(ch.cycles.back()).second) << tag;
      ASSERT_EQ(ch.cycles.size(), ch.steps.size() + 1);
      for (std::size_t k = 0; k < ch.steps.size(); ++k) {
        EXPECT_TRUE(oracle::leq(ch.cycles[k], ch.cycles[k + 1]) && ch.cycles[k] != ch.cycles[k + 1]) << tag;
        if (k > 0) EXPECT_TRUE(oracle::leq(ch.steps[k], ch.steps[k - 1])) << tag;
        EXPECT_TRUE(is_antinef(G, ch.cycles[k + 1])) << tag;
      }
    }
  }
}

TEST(Chains, AgreeWithExhaustiveSearch) {
  for (const char* tag : {"G7:3", "A:2,2,2", "B:1,4", "C:0,5", "D:1", "H:7", "G1", "EX-5.3", "G11:2", "RDP-D:6",
                          "RDP-E7", "T22:3,2,2", "cyclic:2,2,2,2"}) {
    auto G = graph_catalog(tag);
    auto got = enumerate_ulrich_chains(G).cycles();
    std::set<Cycle> mine(got.begin(), got.end());
    EXPECT_EQ(mine, oracle::ulrich_cycles(G, fundamental_cycle(G))) << tag;
  }
}

TEST(Chains, FilterImpliesOnlyZ0) {
  for (const auto& t : quotient_sweep_tags(4, 4, 3)) {
    auto G = graph_catalog(t);
    if (unique_ulrich_filter(G)) EXPECT_EQ(enumerate_ulrich_chains(G).chains.size(), 1u) << t;
  }
}

TEST(Chains, TruncationFlag) {
  auto e = enumerate_ulrich_chains(graph_catalog("A:2,2,2"), 1);
  EXPECT_TRUE(e.truncated);
  EXPECT_EQ(e.chains.size(), 2u);
  EXPECT_THROW(enumerate_ulrich_chains(graph_catalog("A:2,2,2"), -1), PreconditionError);
}

TEST(Catalog, Shapes) {
  auto c = graph_catalog("cyclic:2,5,3");
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.b(1), 5);
  EXPECT_EQ(c.edges().size(), 2u);
  auto t = graph_catalog("T22:3,4,2");
  EXPECT_EQ(t.size(), 5u);
  EXPECT_EQ(t.b(t.index_of("E0")), 3);
  EXPECT_EQ(t.neighbors(t.index_of("E0")).size(), 3u);
  EXPECT_EQ(graph_catalog("RDP-E8").size(), 8u);
  EXPECT_EQ(graph_catalog("RDP-D:4").size(), 4u);
  EXPECT_EQ(graph_catalog("EX-5.3").to_json(), graph_catalog("G10:2").to_json());
  EXPECT_TRUE(is_rtp_graph_tag("H:7"));
  EXPECT_TRUE(is_rtp_graph_tag("G2"));
  EXPECT_FALSE(is_rtp_graph_tag("G2:3"));
  EXPECT_FALSE(is_rtp_graph_tag("RDP-E6"));
}

TEST(Catalog, Identifications) {
  auto same = [](const char* a, const char* b) {
    auto G = graph_catalog(a);
    auto H = graph_catalog(b);
    std::vector<int> x, y;
    for (std::size_t i = 0; i < G.size(); ++i) x.push_back(G.weight(i));
    for (std::size_t i = 0; i < H.size(); ++i) y.push_back(H.weight(i));
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y && G.size() == H.size() && fundamental_cycle(G).size() == fundamental_cycle(H).size() &&
           enumerate_ulrich_chains(G).chains.size() == enumerate_ulrich_chains(H).chains.size() &&
           graph_multiplicity(G) == graph_multiplicity(H);
  };
  EXPECT_TRUE(same("G7:3", "A:1,2,3"));
  EXPECT_TRUE(same("G3:3", "A:1,2,2"));
  EXPECT_TRUE(same("G15:3", "A:1,2,4"));
  EXPECT_TRUE(same("G11:2", "B:1,4"));
  EXPECT_TRUE(same("G3:2", "RDP-E6"));
  EXPECT_TRUE(same("G7:2", "RDP-E7"));
  EXPECT_TRUE(same("G15:2", "RDP-E8"));
}

TEST(Catalog, Errors) {
  EXPECT_THROW(graph_catalog("A:3,2,1"), OutOfRange);
  EXPECT_THROW(graph_catalog("H:4"), OutOfRange);
  EXPECT_THROW(graph_catalog("G16:2"), OutOfRange);
  EXPECT_THROW(graph_catalog("cyclic:1,2"), OutOfRange);
  EXPECT_THROW(graph_catalog("nope"), ParseError);
  EXPECT_THROW(graph_catalog("A:1,x,3"), ParseError);
  EXPECT_THROW(graph_catalog("A:1,2"), ParseError);
}

TEST(Catalog, SweepSize) {
  auto tags = quotient_sweep_tags(4, 4, 3);
  EXPECT_GE(tags.size(), 100u);
  std::set<std::string> unique(tags.begin(), tags.end());
  EXPECT_EQ(unique.size(), tags.size());
}
