#include <gtest/gtest.h>

#include <random>
#include <set>

#include "charvar/errors.hpp"
#include "charvar/projmodel/projmodel.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

BiForm whitehead() { return BiForm::parse(testref::kWhiteheadSurface); }
BiForm surgery2() { return BiForm::parse(testref::kSurgery2Surface); }

std::set<std::string> texts(const std::vector<BiPoint>& pts) {
  std::set<std::string> out;
  for (const auto& p : pts) out.insert(p.to_string());
  return out;
}

Poly partial(const BiForm& F, int v) { return F.poly().derivative(v); }

}  // namespace

TEST(BiPoint, Normalization) {
  BiPoint p({Scalar(0), Scalar(2), Scalar(4)}, {Scalar(-3), Scalar(3)});
  EXPECT_EQ(p.to_string(), "[0,1,2:1,-1]");
  EXPECT_THROW(BiPoint({Scalar(0), Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}), ShapeError);
}

TEST(Bihomogenize, WhiteheadMatchesReference) {
  BiForm F = bihomogenize(Poly::parse(testref::kWhiteheadTrace, trace_vars()));
  EXPECT_EQ(F.bidegree(), (Bidegree{2, 3}));
  EXPECT_EQ(F.poly(), whitehead().poly());
  EXPECT_TRUE(satisfies_euler_relations(F));
}

TEST(BiForm, RejectsNonBihomogeneous) {
  EXPECT_THROW(BiForm::parse("x*z + u"), ShapeError);
}

TEST(Charts, AffineRestriction) {
  Poly c = chart(whitehead().poly(), 0, 3);
  // x = z = 1: remaining variables y, u, w.
  EXPECT_EQ(c.nvars(), 3);
  EXPECT_EQ(c.vars().name(0), "y");
}

TEST(ConicMatrix, ReconstructsForm) {
  for (const BiForm& F : {whitehead(), surgery2()}) {
    ConicMatrix M = conic_matrix(F);
    EXPECT_EQ(M.quadratic_form(), F.poly());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) EXPECT_EQ(M.m[i][j], M.m[j][i]);
    }
  }
  EXPECT_THROW(conic_matrix(BiForm::parse("x^3*z")), ShapeError);
}

TEST(Fibers, Whitehead) {
  FiberTable t = classify_fibers(conic_matrix(whitehead()));
  EXPECT_EQ(t.discriminant.total_degree(), 9);
  ASSERT_EQ(t.fibers.size(), 6u);
  int mult = 0;
  int doubles = 0;
  for (const auto& f : t.fibers) {
    mult += f.multiplicity;
    if (f.kind == FiberKind::DoubleLine) {
      ++doubles;
      EXPECT_EQ(f.rank, 1);
      EXPECT_EQ(f.zw[0], Scalar(1));
      EXPECT_TRUE(f.zw[1].is_zero());
    } else {
      EXPECT_EQ(f.kind, FiberKind::Degenerate);
      EXPECT_EQ(f.rank, 2);
    }
  }
  EXPECT_EQ(doubles, 1);
  EXPECT_EQ(mult, 9);
}

TEST(Fibers, SurgeryTwoDiscriminant) {
  // det M = −(w²/4)(z−2w)(z+2w)(z²−2w²), factored by hand from the matrix.
  FiberTable t = classify_fibers(conic_matrix(surgery2()));
  Poly expected = Poly::parse("-1/4*w^2*(z-2*w)*(z+2*w)*(z^2-2*w^2)", base_vars());
  EXPECT_EQ(t.discriminant, expected);
  EXPECT_EQ(t.fibers.size(), 5u);
}

TEST(Fibers, RankIsThreeAwayFromDiscriminant) {
  FiberTable t = classify_fibers(conic_matrix(whitehead()));
  ConicMatrix M = conic_matrix(whitehead());
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    Scalar z(static_cast<long>(rng() % 41) - 20);
    Scalar w(static_cast<long>(rng() % 7) + 1);
    bool on_disc = t.discriminant.eval(std::vector<Scalar>{z, w}).is_zero();
    EXPECT_EQ(M.at(z, w).rank() == 3, !on_disc);
  }
}

TEST(FiberTableText, NoTrailingSpaces) {
  std::string text = fiber_table_text(classify_fibers(conic_matrix(whitehead())));
  EXPECT_EQ(text.find(" \n"), std::string::npos);
  EXPECT_NE(text.find("double line"), std::string::npos);
}

TEST(BinaryFormRoots, Examples) {
  auto roots = binary_form_roots(Poly::parse("z*w^2*(z-w)", base_vars()));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_THROW(binary_form_roots(Poly::parse("z^2+w^2", base_vars())), UnsplittableFactorError);
}

TEST(SingularPoints, Whitehead) {
  auto pts = singular_points(whitehead());
  EXPECT_EQ(texts(pts), (std::set<std::string>{"[1,0,0:1,0]", "[0,1,0:1,0]", "[1,-1,0:1,-1]", "[1,1,0:1,1]"}));
  for (const auto& p : pts) {
    auto c = p.coords();
    EXPECT_TRUE(whitehead().poly().eval(c).is_zero());
    for (int v = 0; v < 5; ++v) EXPECT_TRUE(partial(whitehead(), v).eval(c).is_zero());
  }
}

TEST(SingularPoints, SurgeryTwo) {
  EXPECT_EQ(texts(singular_points(surgery2())), (std::set<std::string>{"[1,0,0:1,0]", "[0,1,0:1,0]"}));
}

TEST(SingularPoints, SmoothSurfaceHasNone) {
  EXPECT_TRUE(singular_points(BiForm::parse("x^2*z + y^2*w + u^2*(z+w)")).empty());
}

TEST(SingularPoints, NonIsolatedLocus) {
  EXPECT_THROW(singular_points(BiForm::parse("x^2*z")), PositiveDimensionalError);
}

TEST(Formulas, GenusAndIntersection) {
  EXPECT_EQ(geometric_genus(2, 3), 0);
  EXPECT_EQ(geometric_genus(3, 2), 1);
  EXPECT_EQ(geometric_genus(4, 5), 12);
  EXPECT_EQ(intersection_number({1, 1}, {1, 1}), 2);
  EXPECT_EQ(intersection_number({0, 1}, {1, 1}), 1);
  EXPECT_EQ(intersection_number({0, 1}, {2, 1}), 2);
}
