#pragma once

#include <cstdint>
#include <vector>

#include "charvar/exactnum/scalar.hpp"
#include "charvar/poly/poly.hpp"
#include "charvar/poly/upoly.hpp"

namespace charvar {

/// Which quadratic fields ℚ(√d) may be adjoined when splitting polynomials.
/// An empty list admits every radicand.
struct FieldPolicy {
  std::vector<std::int64_t> radicands;

  bool allows(std::int64_t d) const;
  bool allows(const Field& f) const { return f.is_rational() || allows(f.radicand); }
};

/// Degree caps. These bound the work of the factorization routines and are
/// configuration, not mathematics.
struct FactorCaps {
  int univariate_degree = 24;
  int biform_a = 16;
  int biform_b = 16;
};

struct URoot {
  Scalar value;
  int multiplicity = 1;
};

struct RootResult {
  /// Distinct roots in canonical order.
  std::vector<URoot> roots;
  /// Monic factors (with multiplicity) whose roots are not admissible.
  std::vector<std::pair<UPoly, int>> unsplit;
};

/// Roots of p in its coefficient field or in one admissible quadratic
/// extension of ℚ (only when p has rational coefficients).
RootResult univariate_roots(const UPoly& p, const FieldPolicy& policy = {});

/// Irreducible monic factors over the coefficient field of p (ℚ or ℚ(√d)),
/// with multiplicities.
std::vector<std::pair<UPoly, int>> factor_over_field(const UPoly& p);

struct UFactor {
  Poly factor;
  int multiplicity = 1;
};

struct UnivariateFactorization {
  Scalar unit;
  std::vector<UFactor> factors;
  Field field;

  Poly product(const VarSet& vars) const;
};

/// Factors a polynomial in one variable over its coefficient field, then
/// splits quadratic factors whose roots lie in an admissible ℚ(√d′).
/// Throws UnsplittableFactorError for irreducible factors of degree ≥ 3 and
/// CapExceededError above the degree cap.
UnivariateFactorization univariate_factor(const Poly& p, const FieldPolicy& policy = {}, const FactorCaps& caps = {});

struct MFactor {
  Poly factor;
  int multiplicity = 1;
};

struct MultivariateFactorization {
  Scalar unit;
  std::vector<MFactor> factors;

  Poly product() const;
};

/// Irreducible factorization over ℚ of a polynomial with rational
/// coefficients (square-free decomposition, then Hensel lifting of a
/// univariate image). Factors are normalized and sorted canonically; the
/// product times `unit` reproduces p exactly (re-verified).
MultivariateFactorization factor_multivariate(const Poly& p, const FactorCaps& caps = {});

/// Canonical ordering for factor lists: by total degree, then by text.
bool factor_less(const Poly& a, const Poly& b);

}  // namespace charvar
