#include <gtest/gtest.h>

#include <algorithm>

#include "ulrich/errors.hpp"
#include "ulrich/presentations.hpp"
#include "ulrich/ulrich.hpp"

using namespace ulrich;

namespace {

Ideal gens(const RingPresentation& R, const std::vector<std::string>& g) { return R.quotient.parse_ideal(g); }

// Closed forms for res(A), written out per family.
int expected_residue(const FamilyTag& tag) {
  const auto& p = tag.params;
  switch (tag.family) {
    case Family::A:
      return p[0] + 1;
    case Family::B:
      return std::min((p[1] + 1) / 2, p[0] + 1);
    case Family::C:
      return std::min(2, p[0] + 1);
    case Family::D:
      return std::min(2, p[0] + 1);
    case Family::F:
      return std::min(3, p[0] + 1);
    case Family::H: {
      int n = p[0];
      return n % 3 == 2 ? (n + 1) / 3 : n % 3 == 0 ? n / 3 : (n - 1) / 3;
    }
    case Family::G1:
    case Family::G2:
    case Family::G3:
      return 2;
    case Family::Ex52:
      return 3;
    default:
      throw std::logic_error("no closed form");
  }
}

bool expected_nearly_gorenstein(const FamilyTag& tag) {
  switch (tag.family) {
    case Family::A:
      return tag.params[0] == 0;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::F:
      return tag.params[0] == 0;
    default:
      return false;
  }
}

}  // namespace

TEST(FamilyTag, ParseAndPrint) {
  for (std::string s : {"A:1,2,3", "B:0,4", "H:7", "G2", "RDP-D:6", "RDP-E7", "EX-5.2", "EX-5.3", "RDP-A:1"}) {
    EXPECT_EQ(FamilyTag::parse(s).to_string(), s);
  }
  EXPECT_EQ(FamilyTag::parse("Γ3"), FamilyTag::parse("G3"));
  EXPECT_THROW(FamilyTag::parse("Q:1"), ParseError);
}

TEST(FamilyTag, RangesEnforced) {
  EXPECT_THROW(instantiate("A:2,1,3"), OutOfRange);
  EXPECT_THROW(instantiate("B:0,2"), OutOfRange);
  EXPECT_THROW(instantiate("C:1,3"), OutOfRange);
  EXPECT_THROW(instantiate("H:4"), OutOfRange);
  EXPECT_THROW(instantiate("RDP-D:3"), OutOfRange);
  EXPECT_THROW(instantiate("RDP-A:0"), OutOfRange);
  EXPECT_NO_THROW(instantiate("D:0"));
}

TEST(Instantiate, A123Generators) {
  auto R = instantiate("A:1,2,3");
  EXPECT_EQ(R.cm_type, 2);
  EXPECT_TRUE(ideal_equal(R.quotient.defining(),
                          Ideal::parse(R.ring(), {"x*y - t^5", "x*z - t^6 - z*t^2", "y*z + y*t^4 - z*t^3"})));
}

TEST(Instantiate, E6Equation) {
  auto R = instantiate("RDP-E6");
  EXPECT_EQ(R.cm_type, 1);
  EXPECT_FALSE(R.matrix.has_value());
  EXPECT_TRUE(ideal_equal(R.quotient.defining(), Ideal::parse(R.ring(), {"z^2 + x^3 + y^4"})));
}

TEST(Instantiate, HBranchByResidueMod3) {
  auto R = instantiate("H:5");
  ASSERT_TRUE(R.matrix.has_value());
  const auto& M = *R.matrix;
  auto P = [&](const std::string& s) { return Polynomial::parse(R.ring(), s); };
  EXPECT_EQ(M[0][0], P("x"));
  EXPECT_EQ(M[0][1], P("y"));
  EXPECT_EQ(M[0][2], P("z*t + t^2"));
  EXPECT_EQ(M[1][0], P("y"));
  EXPECT_EQ(M[1][1], P("z"));
  EXPECT_EQ(M[1][2], P("x"));
}

TEST(Instantiate, MinorsMatchPrintedGenerators) {
  for (const auto& tag : rtp_grid(3)) {
    auto R = instantiate(tag);
    ASSERT_TRUE(R.matrix.has_value()) << tag.to_string();
    EXPECT_TRUE(ideal_equal(minors(*R.matrix, 2), R.quotient.defining())) << tag.to_string();
    if (!R.printed_generators.empty()) {
      EXPECT_TRUE(ideal_equal(Ideal::parse(R.ring(), R.printed_generators), R.quotient.defining()))
          << tag.to_string();
    }
  }
}

TEST(Instantiate, Ex53IsTypeThree) {
  auto R = instantiate("EX-5.3");
  EXPECT_EQ(R.cm_type, 3);
  ASSERT_TRUE(R.matrix.has_value());
  EXPECT_EQ((*R.matrix)[0].size(), 4u);
  EXPECT_TRUE(ideal_equal(minors(*R.matrix, 2), R.quotient.defining()));
}

TEST(Trace, FamilyShapes) {
  for (int l = 0; l <= 2; ++l) {
    auto R = instantiate(FamilyTag{Family::A, {l, 2, 3}});
    EXPECT_TRUE(ideal_equal(trace_ideal(R), R.quotient.lift(gens(R, {"x", "y", "z", "t^" + std::to_string(l + 1)}))));
  }
  for (int n = 0; n <= 3; ++n) {
    auto R = instantiate(FamilyTag{Family::F, {n}});
    int a = std::min(3, n + 1);
    EXPECT_TRUE(ideal_equal(trace_ideal(R), R.quotient.lift(gens(R, {"x", "y", "z", "t^" + std::to_string(a)}))));
  }
  auto G1 = instantiate("G1");
  EXPECT_TRUE(ideal_equal(trace_ideal(G1), G1.quotient.lift(gens(G1, {"x", "y", "z", "t^2"}))));
  auto G2 = instantiate("G2");
  EXPECT_TRUE(ideal_equal(trace_ideal(G2), G2.quotient.lift(gens(G2, {"x", "y", "z", "t^2"}))));
}

TEST(Trace, RejectsOtherTypes) {
  EXPECT_THROW(trace_ideal(instantiate("EX-5.3")), UnsupportedType);
  EXPECT_THROW(trace_ideal(instantiate("RDP-E8")), UnsupportedType);
}

TEST(Trace, InvariantUnderMatrixPermutations) {
  for (std::string t : {"A:1,2,3", "B:1,5", "H:7", "G3"}) {
    auto R = instantiate(t);
    Ideal base = trace_ideal(R);
    PolyMatrix M = *R.matrix;
    std::swap(M[0], M[1]);
    for (auto& row : M) std::rotate(row.begin(), row.begin() + 1, row.end());
    RingPresentation P = R;
    P.matrix = M;
    EXPECT_TRUE(ideal_equal(trace_ideal(P), base)) << t;
  }
}

TEST(Residue, Examples) {
  EXPECT_EQ(residue(instantiate("A:1,2,3")), 2u);
  EXPECT_EQ(residue(instantiate("H:5")), 2u);
  EXPECT_EQ(residue(instantiate("H:8")), 3u);
  EXPECT_EQ(residue(instantiate("D:0")), 1u);
}

TEST(Residue, ClosedFormsOnSmallGrid) {
  for (const auto& tag : rtp_grid(3)) {
    auto R = instantiate(tag);
    auto res = residue(R);
    EXPECT_EQ(res, static_cast<std::uint64_t>(expected_residue(tag))) << tag.to_string();
    EXPECT_EQ(res == 1, nearly_gorenstein(R)) << tag.to_string();
    EXPECT_EQ(nearly_gorenstein(R), expected_nearly_gorenstein(tag)) << tag.to_string();
  }
}

TEST(Residue, GridSize) {
  auto grid = rtp_grid(4);
  EXPECT_EQ(grid.size(), 72u);
  EXPECT_TRUE(std::all_of(grid.begin(), grid.end(), [](const FamilyTag& t) { return t.is_rtp(); }));
}

TEST(NearlyGorenstein, Examples) {
  EXPECT_TRUE(nearly_gorenstein(instantiate("A:0,1,2")));
  EXPECT_TRUE(nearly_gorenstein(instantiate("B:0,5")));
  EXPECT_FALSE(nearly_gorenstein(instantiate("G2")));
  EXPECT_FALSE(nearly_gorenstein(instantiate("H:6")));
}

TEST(Multiplicity, Catalog) {
  for (std::string t : {"A:1,2,3", "B:2,3", "C:0,4", "D:1", "F:2", "H:5", "G1", "EX-5.2"}) {
    EXPECT_EQ(ring_multiplicity(instantiate(t)), 3u) << t;
  }
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(ring_multiplicity(instantiate(FamilyTag{Family::RdpA, {n}})), 2u);
  EXPECT_EQ(ring_multiplicity(instantiate("RDP-E7")), 2u);
  EXPECT_EQ(ring_multiplicity(instantiate("EX-5.3")), 4u);
}

TEST(Multiplicity, MaximalIdealMinimalGenerators) {
  for (std::string t : {"A:1,2,3", "H:7", "G3"}) {
    auto R = instantiate(t);
    EXPECT_EQ(min_gens(R.quotient, R.quotient.maximal()), 4u) << t;
  }
  auto R = instantiate("RDP-D:5");
  EXPECT_EQ(min_gens(R.quotient, R.quotient.maximal()), 3u);
}

TEST(PublishedReduction, Seeds) {
  EXPECT_EQ(*published_reduction(FamilyTag::parse("A:1,2,3"), 2), (std::vector<std::string>{"t^2", "x + y + z"}));
  EXPECT_EQ(*published_reduction(FamilyTag::parse("EX-5.2"), 3), (std::vector<std::string>{"x", "t^3"}));
  EXPECT_FALSE(published_reduction(FamilyTag::parse("RDP-E6"), 1).has_value());
}
