#include <gtest/gtest.h>

#include <algorithm>

#include "charvar/errors.hpp"
#include "charvar/linkgroup/linkgroup.hpp"
#include "charvar/traceelim/traceelim.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

Poly T(const char* s) { return Poly::parse(s, trace_vars()); }

Poly nonabelian(int n) {
  RelationPolys rp = relation_polys(surgery_word(n));
  return nonabelian_part(rp.p1, rp.p2).p;
}

std::vector<Bidegree> bidegrees(const std::vector<Component>& cs) {
  std::vector<Bidegree> out;
  for (const auto& c : cs) {
    for (int k = 0; k < c.multiplicity; ++k) out.push_back(c.bidegree);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Symmetrize, ShiftMakesInvariant) {
  Poly p = Poly::parse("m^3*s + m*s^3", rep_vars());
  Symmetrized sym = symmetrize(p);
  EXPECT_EQ(sym.q, Poly::parse("m*s^-1 + m^-1*s", rep_vars()));
  EXPECT_THROW(symmetrize(Poly::parse("m + s^2", rep_vars())), ShapeError);
}

TEST(NormalizeTrace, HighestZPowerPositive) {
  EXPECT_EQ(normalize_trace(T("-2*z^3 + 4*x*y*z^2")), T("z^3 - 2*x*y*z^2"));
  EXPECT_EQ(normalize_trace(T("6*x - 3")), T("2*x - 1"));
}

TEST(TraceCoords, Whitehead) {
  TracePoly t = to_trace_coords(nonabelian(1));
  EXPECT_EQ(t.ftilde, T(testref::kWhiteheadTrace));
  EXPECT_EQ(t.bidegree, (Bidegree{2, 3}));
  EXPECT_TRUE(equal_up_to_unit(trace_substitute(t.ftilde), nonabelian(1)));
}

TEST(TraceCoords, RoundTripOfKnownImage) {
  Poly f = T(testref::kSurgery2Trace);
  Poly image = trace_substitute(f);
  EXPECT_EQ(to_trace_coords(image).ftilde, normalize_trace(f));
}

TEST(TraceCoords, RejectsNonTraceImage) {
  EXPECT_THROW(to_trace_coords(Poly::parse("m + r", rep_vars())), Error);
}

TEST(ComponentSplit, WhiteheadIsIrreducible) {
  auto cs = component_split(to_trace_coords(nonabelian(1)));
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_TRUE(cs[0].conic_candidate);
}

TEST(ComponentSplit, SurgeryTwo) {
  auto cs = component_split(to_trace_coords(nonabelian(2)));
  EXPECT_EQ(bidegrees(cs), (std::vector<Bidegree>{{2, 2}, {4, 5}}));
  bool seen22 = false;
  bool seen45 = false;
  for (const auto& c : cs) {
    if (c.bidegree == Bidegree{2, 2}) seen22 = equal_up_to_unit(c.poly, T(testref::kSurgery2Trace));
    if (c.bidegree == Bidegree{4, 5}) seen45 = equal_up_to_unit(c.poly, T(testref::kTrace2Factor45));
  }
  EXPECT_TRUE(seen22);
  EXPECT_TRUE(seen45);
}

TEST(ComponentSplit, SurgeryThreeAndFour) {
  EXPECT_EQ(bidegrees(component_split(to_trace_coords(nonabelian(3)))),
            (std::vector<Bidegree>{{2, 2}, {2, 2}, {6, 7}}));
  auto four = component_split(to_trace_coords(nonabelian(4)));
  EXPECT_EQ(bidegrees(four), (std::vector<Bidegree>{{2, 2}, {4, 4}, {8, 9}}));
  bool matched = std::any_of(four.begin(), four.end(), [](const Component& c) {
    return equal_up_to_unit(c.poly, T("x^2+y^2-x*y*z+z^2-2"));
  });
  EXPECT_TRUE(matched);
}
