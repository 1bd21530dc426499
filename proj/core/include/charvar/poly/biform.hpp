#pragma once

#include <string>
#include <utility>
#include <vector>

#include "charvar/poly/factor.hpp"
#include "charvar/poly/poly.hpp"

namespace charvar {

/// The variable set (x, y, u, z, w) of ℙ²×ℙ¹.
const VarSet& biform_vars();
/// The affine variable set (x, y, z) of the character polynomial.
const VarSet& trace_vars();

struct Bidegree {
  int a = 0;
  int b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
  std::string to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// A polynomial in (x,y,u,z,w) that is homogeneous of degree a in (x,y,u)
/// and of degree b in (z,w).
class BiForm {
 public:
  BiForm() = default;
  /// Validates bihomogeneity; throws ShapeError otherwise.
  BiForm(Poly base, Bidegree deg);
  /// Infers the bidegree from the first term.
  static BiForm from_poly(const Poly& base);
  static BiForm parse(const std::string& text);

  const Poly& poly() const { return base_; }
  Bidegree bidegree() const { return deg_; }
  std::string to_string() const { return base_.to_string(); }

  friend bool operator==(const BiForm&, const BiForm&) = default;

 private:
  Poly base_;
  Bidegree deg_;
};

/// f = u^a w^b f̃(x/u, y/u, z/w) with a = total degree in x,y and b = degree in z.
/// Accepts any polynomial whose variables are among x, y, z.
BiForm bihomogenize(const Poly& ftilde);
/// Inverse of bihomogenize: sets u = w = 1 and returns a polynomial in (x,y,z).
Poly dehomogenize(const BiForm& F);

/// Affine chart where the ℙ²-coordinate `p2` (0:x, 1:y, 2:u) and the
/// ℙ¹-coordinate `p1` (3:z, 4:w) equal 1. The result lives in the three
/// remaining variables, in their (x,y,u,z,w) order.
Poly chart(const Poly& F, int p2, int p1);

/// x∂x+y∂y+u∂u F == aF and z∂z+w∂w F == bF.
bool satisfies_euler_relations(const BiForm& F);

struct BiFactor {
  BiForm factor;
  int multiplicity = 1;
};

struct BiFactorization {
  Scalar unit;
  std::vector<BiFactor> factors;
  Poly product() const;
};

/// Irreducible factorization over ℚ of a bihomogeneous form. The product of
/// the factors times `unit` is re-verified against F.
BiFactorization factor_biform_interp(const BiForm& F, const FactorCaps& caps = {});

}  // namespace charvar
