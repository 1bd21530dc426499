#pragma once

#include <utility>
#include <vector>

#include "charvar/poly/poly.hpp"

namespace charvar {

/// Greatest common divisor, normalized (primitive, positive canonical leading
/// coefficient). Laurent inputs are compared after clearing denominators, so
/// the result never carries a monomial unit that only one side shares.
/// gcd(p, 0) = normalize(p); gcd(0, 0) = 0.
Poly gcd_multivariate(const Poly& a, const Poly& b);

/// gcd of the coefficients of p viewed as a polynomial in `var`.
Poly content_in(const Poly& p, int var);
/// p divided by content_in(p, var).
Poly primitive_part_in(const Poly& p, int var);

/// Sylvester resultant with respect to `var` (subresultant PRS).
Poly resultant(const Poly& a, const Poly& b, int var);

/// Square-free decomposition over the coefficient field: pairs (f_i, i)
/// with f_i normalized, square-free, pairwise coprime, and p equal to a
/// scalar times Π f_i^i. Factors of multiplicity with constant f_i are
/// omitted.
std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p);

/// Product of the distinct square-free factors.
Poly squarefree_part(const Poly& p);

}  // namespace charvar
