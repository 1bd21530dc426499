#pragma once

#include <vector>

#include "charvar/poly/factor.hpp"
#include "charvar/poly/poly.hpp"

namespace charvar {

/// All common zeros of `eqs` with coordinates in ℚ or one admissible ℚ(√d).
/// Each solution assigns every variable of the (shared) variable set, in
/// variable order. Solutions are sorted canonically and verified by exact
/// substitution.
///
/// Method: resultant elimination down to one variable (pivoting on the
/// equation of lowest positive degree), roots via univariate factoring, then
/// recursion on the specialized system. Elimination orders are retried when
/// an order loses all information or leaves an unsplittable factor that a
/// different order rules out.
///
/// Throws PositiveDimensionalError when the zero set is not finite and
/// UnsplittableFactorError when coordinates would need a field outside the
/// policy.
std::vector<std::vector<Scalar>> solve_zero_dimensional(const std::vector<Poly>& eqs, const FieldPolicy& policy = {},
                                                        const FactorCaps& caps = {});

}  // namespace charvar
