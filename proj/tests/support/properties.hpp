#pragma once

#include <cstdint>
#include <string>

#include "charvar/euler/euler.hpp"

namespace charvar::props {

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

/// Evaluation commutes with ring operations, and the trace map commutes
/// with evaluation.
Outcome evaluation_homomorphism(std::uint64_t seed, int cases);
/// gcd(ac, bc) divides both inputs and is divisible by c.
Outcome gcd_divides(std::uint64_t seed, int cases);
/// Bihomogenized random trace polynomials satisfy both Euler relations and
/// dehomogenize back.
Outcome euler_relations(std::uint64_t seed, int cases);
/// Blow-up charts satisfy substitute = v^k · strict transform.
Outcome blowup_identity(std::uint64_t seed, int cases);
/// Every reported factor divides the input and the product reproduces it.
Outcome factorization_by_division(std::uint64_t seed, int cases);
/// Off B∪Q the fiber of the double cover has 2 points; on B off L it has 1.
Outcome fiber_dichotomy(const BiForm& F, std::uint64_t seed, int off_branch_points);
/// Two runs of the same pipeline input give byte-identical JSON.
Outcome deterministic_report(const std::string& trace_polynomial);

}  // namespace charvar::props
