#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/exactnum/matrix.hpp"
#include "charvar/poly/biform.hpp"

namespace charvar {

/// Point [x,y,u : z,w] of ℙ²×ℙ¹, each factor scaled so that its first
/// nonzero coordinate is 1.
class BiPoint {
 public:
  BiPoint() = default;
  /// Throws ShapeError when a factor is entirely zero.
  BiPoint(std::array<Scalar, 3> p2, std::array<Scalar, 2> p1);

  const std::array<Scalar, 3>& p2() const { return p2_; }
  const std::array<Scalar, 2>& p1() const { return p1_; }
  /// Coordinates in (x,y,u,z,w) order.
  std::vector<Scalar> coords() const;
  std::string to_string() const;

  friend bool operator==(const BiPoint&, const BiPoint&) = default;
  friend bool operator<(const BiPoint& a, const BiPoint& b);

 private:
  std::array<Scalar, 3> p2_;
  std::array<Scalar, 2> p1_;
};

/// Normalizes a projective point so that its first nonzero entry is 1.
std::vector<Scalar> normalize_projective(std::vector<Scalar> v);

/// Variables (z, w) of the base ℙ¹.
const VarSet& base_vars();

/// Symmetric 3×3 matrix over binary forms in (z,w) with
/// (x,y,u)·M·(x,y,u)ᵀ = F.
struct ConicMatrix {
  std::array<std::array<Poly, 3>, 3> m;

  Poly det() const;
  Matrix at(const Scalar& z, const Scalar& w) const;
  /// (x,y,u)·M·(x,y,u)ᵀ as a polynomial in (x,y,u,z,w).
  Poly quadratic_form() const;
};

/// Throws ShapeError unless F has bidegree (2, b).
ConicMatrix conic_matrix(const BiForm& F);

enum class FiberKind { Smooth, Degenerate, DoubleLine };
std::string to_string(FiberKind k);

struct FiberClass {
  std::array<Scalar, 2> zw;
  int rank = 3;
  FiberKind kind = FiberKind::Smooth;
  int multiplicity = 0;
};

struct FiberTable {
  Poly discriminant;        ///< det M, a binary form of degree 3b
  std::vector<FiberClass> fibers;  ///< non-smooth fibers only
};

/// Roots of a binary form in (z,w) as normalized projective points with
/// multiplicities. Throws UnsplittableFactorError when a root lies outside
/// the policy.
std::vector<std::pair<std::array<Scalar, 2>, int>> binary_form_roots(const Poly& form, const FieldPolicy& policy = {});

FiberTable classify_fibers(const ConicMatrix& M, const FieldPolicy& policy = {});

/// Common zeros of F and its five partials, solved on all six affine charts
/// and merged. Throws PositiveDimensionalError for non-isolated singular loci.
std::vector<BiPoint> singular_points(const BiForm& F, const FieldPolicy& policy = {}, const FactorCaps& caps = {});

/// (a−1)(a−2)(b−1)/2.
long geometric_genus(int a, int b);
/// a₁b₂ + a₂b₁.
long intersection_number(Bidegree c1, Bidegree c2);

nlohmann::json to_json(const BiPoint& p);
nlohmann::json to_json(const FiberTable& t);
std::string fiber_table_text(const FiberTable& t);

}  // namespace charvar
