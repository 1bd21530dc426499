#include <gtest/gtest.h>

#include "support/properties.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

void expect_ok(const props::Outcome& o, int min_cases) {
  EXPECT_GE(o.cases, min_cases);
  EXPECT_EQ(o.failures, 0) << o.first_failure;
}

}  // namespace

TEST(Property, EvaluationHomomorphismWithTraceMap) { expect_ok(props::evaluation_homomorphism(11, 150), 150); }

TEST(Property, GcdDivides) { expect_ok(props::gcd_divides(12, 80), 50); }

TEST(Property, EulerRelations) { expect_ok(props::euler_relations(13, 100), 80); }

TEST(Property, BlowupIdentity) { expect_ok(props::blowup_identity(14, 100), 80); }

TEST(Property, FactorizationByDivision) { expect_ok(props::factorization_by_division(15, 60), 40); }

TEST(Property, FiberDichotomyWhitehead) {
  expect_ok(props::fiber_dichotomy(BiForm::parse(testref::kWhiteheadSurface), 16, 200), 200);
}

TEST(Property, FiberDichotomySurgeryTwo) {
  expect_ok(props::fiber_dichotomy(BiForm::parse(testref::kSurgery2Surface), 17, 200), 200);
}

TEST(Property, DeterministicReport) { expect_ok(props::deterministic_report(testref::kWhiteheadTrace), 1); }
