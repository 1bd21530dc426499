#include <gtest/gtest.h>

#include <random>

#include "charvar/errors.hpp"
#include "charvar/linkgroup/linkgroup.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

Poly rep(const char* s) { return Poly::parse(s, rep_vars()); }

GroupWord random_word(std::mt19937_64& rng, int len) {
  GroupWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back({rng() % 2 ? 'a' : 'b', rng() % 2 ? 1 : -1});
  return w;
}

}  // namespace

TEST(SurgeryWord, Whitehead) {
  EXPECT_EQ(surgery_word(1).to_string(), testref::kWhiteheadWord);
  EXPECT_EQ(surgery_word(1), GroupWord::parse("b a b^-1 a^-1 b^-1 a b"));
}

TEST(SurgeryWord, LengthAndAlternation) {
  for (int n = 1; n <= 6; ++n) {
    GroupWord w = surgery_word(n);
    ASSERT_EQ(w.letters.size(), static_cast<std::size_t>(8 * n - 1));
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      EXPECT_EQ(w.letters[i].gen, i % 2 == 0 ? 'b' : 'a');
      EXPECT_EQ(w.letters[i].exp, surgery_exponent(n, static_cast<int>(i) + 1));
    }
  }
  EXPECT_THROW(surgery_word(0), ShapeError);
}

TEST(SurgeryWord, ExponentFormula) {
  // Exponent sequence for n = 2, tabulated independently in sympy.
  const int expected[] = {1, 1, -1, -1, 1, 1, -1, -1, -1, 1, 1, -1, -1, 1, 1};
  for (int i = 1; i <= 15; ++i) EXPECT_EQ(surgery_exponent(2, i), expected[i - 1]) << i;
}

TEST(SurgeryWord, SchubertLabel) { EXPECT_EQ(schubert_label(1), "S(8,5)"); }

TEST(GroupWordText, ParseAndErrors) {
  EXPECT_EQ(GroupWord::parse("a^-1 b").to_string(), "a^-1 b");
  EXPECT_THROW(GroupWord::parse("c"), ParseError);
  EXPECT_THROW(GroupWord::parse("a^x"), ParseError);
  EXPECT_THROW(GroupWord::parse(""), ParseError);
}

TEST(RepMatrices, GeneratorsHaveUnitDeterminant) {
  for (char g : {'a', 'b'}) {
    for (int e : {1, -1}) EXPECT_EQ(generator_matrix(g, e).det(), rep("1"));
  }
  EXPECT_EQ(generator_matrix('a', 1) * generator_matrix('a', -1), SymMat2::identity());
  EXPECT_EQ(generator_matrix('b', -1) * generator_matrix('b', 1), SymMat2::identity());
}

TEST(RepMatrices, RandomWordsHaveUnitDeterminant) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    GroupWord w = random_word(rng, 1 + static_cast<int>(rng() % 9));
    EXPECT_EQ(rep_matrices(w).det(), rep("1")) << w.to_string();
  }
}

TEST(RepMatrices, ConcatenationIsMultiplication) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    GroupWord u = random_word(rng, 1 + static_cast<int>(rng() % 5));
    GroupWord v = random_word(rng, 1 + static_cast<int>(rng() % 5));
    GroupWord uv = u;
    uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
    EXPECT_EQ(rep_matrices(uv), rep_matrices(u) * rep_matrices(v));
  }
}

TEST(RelationPolys, WhiteheadMatchesReference) {
  RelationPolys rp = relation_polys(surgery_word(1));
  EXPECT_TRUE(equal_up_to_unit(rp.p1, rep(testref::kWhiteheadP1)));
  EXPECT_TRUE(equal_up_to_unit(rp.p2, rep(testref::kWhiteheadP2)));
  EXPECT_TRUE(rp.p1.is_polynomial());
  EXPECT_TRUE(rp.p2.is_polynomial());
}

TEST(NonabelianPart, WhiteheadGcdAndCofactors) {
  RelationPolys rp = relation_polys(surgery_word(1));
  NonabelianPart na = nonabelian_part(rp.p1, rp.p2);
  EXPECT_FALSE(na.trivial);
  EXPECT_TRUE(equal_up_to_unit(na.p, rep(testref::kWhiteheadCore)));
  EXPECT_EQ(na.p.size(), 16u);
  EXPECT_EQ(na.g1 * na.p, rp.p1);
  EXPECT_EQ(na.g2 * na.p, rp.p2);
  EXPECT_TRUE(equal_up_to_unit(na.g1, rep("r*s")));
  EXPECT_TRUE(equal_up_to_unit(na.g2, rep("s^2-1")));
}

TEST(NonabelianPart, SingleLetterIsAbelian) {
  RelationPolys rp = relation_polys(GroupWord::parse("b"));
  NonabelianPart na = nonabelian_part(rp.p1, rp.p2);
  EXPECT_TRUE(na.trivial);
}
