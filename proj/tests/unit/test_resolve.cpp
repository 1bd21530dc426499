#include <gtest/gtest.h>

#include "charvar/errors.hpp"
#include "charvar/resolve/resolve.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

BiForm whitehead() { return BiForm::parse(testref::kWhiteheadSurface); }
Poly E(const char* s) { return Poly::parse(s, exceptional_vars()); }

}  // namespace

TEST(Localize, WhiteheadS1) {
  BiPoint s1({Scalar(1), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)});
  LocalModel m = localize(whitehead(), s1);
  EXPECT_EQ(m.f.vars().names(), (std::vector<std::string>{"y", "u", "w"}));
  EXPECT_TRUE(m.f.constant_term().is_zero());
  EXPECT_EQ(m.f.low_total_degree(), 2);
  EXPECT_EQ(m.to_global({Scalar(0), Scalar(0), Scalar(0)}), s1);
  EXPECT_THROW(localize(whitehead(), BiPoint({Scalar(0), Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)})),
               ShapeError);
}

TEST(BlowUp, WhiteheadS1Charts) {
  BiPoint s1({Scalar(1), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)});
  auto charts = blow_up_origin(localize(whitehead(), s1).f);
  // Chart a=1 gives the displayed conic up to sign.
  EXPECT_TRUE(equal_up_to_unit(charts[0].exceptional_curve, E(testref::kS1ChartAConic)));
  EXPECT_EQ(charts[0].exceptional_curve, E("b^2+c^2-c"));
  EXPECT_EQ(charts[1].exceptional_curve, E("1-a*c+c^2"));
  EXPECT_EQ(charts[2].exceptional_curve, E("1-a+b^2"));
  VarSet chart_b{"a", "u", "c"};
  EXPECT_EQ(charts[1].strict_transform,
            Poly::parse("1 - a*c + c^2 - 2*c^2*u^2 + a^2*c^2*u^2 - a*c^3*u^2", chart_b));
  for (const auto& r : charts) {
    EXPECT_EQ(r.multiplicity, 2);
    EXPECT_TRUE(blowup_identity_holds(localize(whitehead(), s1).f, r));
  }
  ExceptionalConic conic = exceptional_conic(charts);
  EXPECT_EQ(conic.rank, 3);
  EXPECT_EQ(conic.genus, 0);
  EXPECT_TRUE(equal_up_to_unit(conic.conic, E("b^2+c^2-a*c")));
}

TEST(BlowUp, RejectsSmoothOrigin) {
  EXPECT_THROW(blow_up_origin(Poly::parse("x + y^2", VarSet{"x", "y", "z"})), ShapeError);
}

TEST(BlowUp, ConeOverSmoothConic) {
  VarSet vs{"x", "y", "z"};
  auto charts = blow_up_origin(Poly::parse("x^2 + y^2 - z^2 + x^3", vs));
  ExceptionalConic c = exceptional_conic(charts);
  EXPECT_EQ(c.rank, 3);
  for (const auto& r : charts) EXPECT_TRUE(smoothness_audit(r).smooth);
}

TEST(BlowUp, A3NeedsMoreThanOneBlowUp) {
  // x² + y² + z⁴: the tangent cone is a line pair and chart c stays singular.
  VarSet vs{"x", "y", "z"};
  auto charts = blow_up_origin(Poly::parse("x^2 + y^2 + z^4", vs));
  EXPECT_THROW(exceptional_conic(charts), ShapeError);
  EXPECT_FALSE(smoothness_audit(charts[2]).smooth);
}

TEST(ChiIncrement, Values) {
  EXPECT_EQ(chi_increment(0, PointKind::Singular), 1);
  EXPECT_EQ(chi_increment(1, PointKind::Singular), 3);
  EXPECT_EQ(chi_increment(0, PointKind::Smooth), 1);
}

TEST(ResolvePoint, AllWhiteheadPoints) {
  auto sing = singular_points(whitehead());
  int total = 0;
  for (const auto& p : sing) {
    ResolutionRecord r = resolve_point(whitehead(), p, sing);
    EXPECT_TRUE(r.smooth) << p.to_string();
    EXPECT_EQ(r.conic.rank, 3);
    total += r.chi_increment;
    auto j = to_json(r);
    EXPECT_EQ(j["point"], to_json(p));
  }
  EXPECT_EQ(total, 4);
}

TEST(ResolvePoint, SurgeryTwo) {
  BiForm F = BiForm::parse(testref::kSurgery2Surface);
  auto sing = singular_points(F);
  ASSERT_EQ(sing.size(), 2u);
  for (const auto& p : sing) {
    ResolutionRecord r = resolve_point(F, p, sing);
    EXPECT_TRUE(r.smooth);
    EXPECT_EQ(r.chi_increment, 1);
  }
}
