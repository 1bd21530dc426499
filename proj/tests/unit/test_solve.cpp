#include <gtest/gtest.h>

#include "charvar/errors.hpp"
#include "charvar/poly/solve.hpp"

using namespace charvar;

namespace {

std::vector<Poly> system(const VarSet& vs, std::initializer_list<const char*> eqs) {
  std::vector<Poly> out;
  for (const char* e : eqs) out.push_back(Poly::parse(e, vs));
  return out;
}

std::vector<Poly> with_partials(const Poly& f) {
  std::vector<Poly> out{f};
  for (int v = 0; v < f.nvars(); ++v) out.push_back(f.derivative(v));
  return out;
}

}  // namespace

TEST(Solve, RationalPoints) {
  VarSet vs{"x", "y"};
  auto sols = solve_zero_dimensional(system(vs, {"x^2 - 1", "y - x"}));
  ASSERT_EQ(sols.size(), 2u);
  EXPECT_EQ(sols[0][0], Scalar(-1));
  EXPECT_EQ(sols[1][1], Scalar(1));
}

TEST(Solve, QuadraticFieldPoints) {
  VarSet vs{"x", "y"};
  auto sols = solve_zero_dimensional(system(vs, {"x^2 - 2", "x*y - 1"}));
  ASSERT_EQ(sols.size(), 2u);
  for (const auto& s : sols) EXPECT_EQ(s[0] * s[1], Scalar(1));
  FieldPolicy only3{{3}};
  EXPECT_THROW(solve_zero_dimensional(system(vs, {"x^2 - 2", "y"}), only3), UnsplittableFactorError);
}

TEST(Solve, ComplexPointsAreUnsplittable) {
  VarSet vs{"x", "y"};
  EXPECT_THROW(solve_zero_dimensional(system(vs, {"x^2 + 1", "y"})), UnsplittableFactorError);
}

TEST(Solve, PositiveDimensional) {
  VarSet vs{"x", "y"};
  EXPECT_THROW(solve_zero_dimensional(system(vs, {"x*y"})), PositiveDimensionalError);
}

TEST(Solve, Inconsistent) {
  VarSet vs{"x", "y"};
  EXPECT_TRUE(solve_zero_dimensional(system(vs, {"x - 1", "x - 2", "y"})).empty());
}

TEST(Solve, SharedFactorsDoNotHideSolutions) {
  // Pairs of equations share factors; the solution set is {(0,1), (1,1)}.
  VarSet vs{"x", "y"};
  auto sols = solve_zero_dimensional(system(vs, {"x*(y^2-1)", "x*(x-1) + (x-1)*(y-1)", "x*(x-y)"}));
  for (const auto& s : sols) {
    for (const auto& e : system(vs, {"x*(y^2-1)", "x*(x-1) + (x-1)*(y-1)", "x*(x-y)"})) EXPECT_TRUE(e.eval(s).is_zero());
  }
  EXPECT_EQ(sols.size(), 2u);
}

TEST(Solve, EmptyBlowupChartSystems) {
  // Strict transforms whose partials have common factors with each other;
  // resultant elimination alone returns zero or spurious complex factors.
  VarSet vs{"a", "u", "c"};
  Poly s1 = Poly::parse("a^2*u^2*c^2-a*u^2*c^3-2*u^2*c^2-a*c+c^2+1", vs);
  EXPECT_TRUE(solve_zero_dimensional(with_partials(s1)).empty());
  Poly s3 = Poly::parse("a^2*u^2*c^2-a*u^2*c^3-2*a^2*u*c+a*u*c^2-2*u^2*c^2+u*c^3+a^2+4*u*c-c^2-1", vs);
  EXPECT_TRUE(solve_zero_dimensional(with_partials(s3)).empty());
  VarSet vx{"x", "b", "c"};
  Poly n2 = Poly::parse("-2*x^2*b^2*c^2+x^2*c^2+b^2+c^2-c", vx);
  EXPECT_TRUE(solve_zero_dimensional(with_partials(n2)).empty());
}

TEST(Solve, RejectsMixedVariableSets) {
  EXPECT_THROW(solve_zero_dimensional({Poly::parse("x", VarSet{"x"}), Poly::parse("y", VarSet{"y"})}), ShapeError);
}
