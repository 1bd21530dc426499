#pragma once

#include <string>
#include <vector>

#include "charvar/poly/biform.hpp"
#include "charvar/poly/poly.hpp"

namespace charvar {

/// Multiplies p(m,s,r) by the monomial m^α s^β that makes it invariant
/// under σ: (m,s,r) ↦ (1/m,1/s,r). Throws ShapeError when no such monomial
/// exists.
struct Symmetrized {
  Poly q;             ///< σ-invariant Laurent polynomial
  Monomial shift;     ///< m^α s^β with q = shift·p
};
Symmetrized symmetrize(const Poly& p);

/// Primitive over ℚ with the term of highest z-power (then highest x, then
/// y) positive. Works for polynomials in (x,y,z).
Poly normalize_trace(const Poly& f);

struct TracePoly {
  Poly ftilde;        ///< in (x,y,z)
  Bidegree bidegree;  ///< (deg in {x,y}, deg in z)
  std::string provenance;
};

/// f̃(x,y,z) with f̃(m+1/m, s+1/s, ms+1/(ms)+r) = unit·p, found by
/// undetermined coefficients: after r = z − ms − 1/(ms), each z^k
/// coefficient is matched against Σ c_ij (m+1/m)^i (s+1/s)^j by an exact
/// linear solve. The back-substitution identity is verified; failure raises
/// InternalCheckError.
TracePoly to_trace_coords(const Poly& p, const std::string& provenance = "");

/// Image of f̃ under the trace map, in (m,s,r).
Poly trace_substitute(const Poly& ftilde);

struct Component {
  Poly poly;          ///< irreducible factor of f̃ in (x,y,z), trace-normalized
  Bidegree bidegree;
  int multiplicity = 1;
  /// a = 2: the component is a candidate conic bundle.
  bool conic_candidate = false;
};

/// Irreducible factors of f̃ over ℚ, sorted by bidegree then text.
std::vector<Component> component_split(const TracePoly& t, const FactorCaps& caps = {});

}  // namespace charvar
