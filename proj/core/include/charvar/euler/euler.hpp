#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/poly/biform.hpp"
#include "charvar/projmodel/projmodel.hpp"
#include "charvar/resolve/resolve.hpp"

namespace charvar {

/// F = g(x,y,z,w) + u²·h(z,w).
struct EvenSplit {
  BiForm g;  ///< bidegree (2,b), free of u
  Poly h;    ///< binary form of degree b in base_vars()
};

/// Throws ShapeError when F is not of the form g + u²h.
EvenSplit split_even(const BiForm& F);

/// Point [x,y : z,w] of ℙ¹×ℙ¹ with both factors normalized.
class P1P1Point {
 public:
  P1P1Point() = default;
  P1P1Point(std::array<Scalar, 2> xy, std::array<Scalar, 2> zw);
  const std::array<Scalar, 2>& xy() const { return xy_; }
  const std::array<Scalar, 2>& zw() const { return zw_; }
  std::string to_string() const;
  friend bool operator==(const P1P1Point&, const P1P1Point&) = default;
  friend bool operator<(const P1P1Point& a, const P1P1Point& b);

 private:
  std::array<Scalar, 2> xy_;
  std::array<Scalar, 2> zw_;
};

/// Value of a form in (x,y,u,z,w) at [x,y:z,w] with u = 0.
Scalar eval_at(const Poly& form, const P1P1Point& p);

struct BranchComponent {
  Poly factor;  ///< in biform_vars(), free of u
  Bidegree bidegree;
};

struct BranchIntersection {
  P1P1Point point;
  int components = 0;  ///< number of components through the point
};

struct BranchGeometry {
  std::vector<BranchComponent> components;
  std::vector<BranchIntersection> intersections;
  long chi = 0;
};

/// Components of the curve g = 0 in ℙ¹×ℙ¹ and their intersection points.
/// Every component must be reduced and rational; otherwise ShapeError.
BranchGeometry branch_geometry(const BiForm& g, const FieldPolicy& policy = {}, const FactorCaps& caps = {});

/// The restriction of g to the ℙ¹ over one root of h.
struct RootFiber {
  std::array<Scalar, 2> root;
  Poly quadratic;  ///< binary form in x,y
  /// L-points over the root. Empty when they are not representable in an
  /// admissible real field; `count` is still exact.
  std::vector<P1P1Point> points;
  int count = 0;
};

struct InfiniteFibers {
  std::vector<RootFiber> roots;
  std::vector<BiPoint> fundamental;  ///< [0,0,1 : z₀,w₀], one per root of h
  long chi_q = 0;
  long chi_l = 0;
  long chi_preimage_l = 0;

  std::size_t l_size() const;
};

InfiniteFibers infinite_fibers(const EvenSplit& split, const FieldPolicy& policy = {});

struct CoverGeometry {
  BranchGeometry branch;
  InfiniteFibers infinite;
};

CoverGeometry cover_geometry(const EvenSplit& split, const FieldPolicy& policy = {}, const FactorCaps& caps = {});

/// 2χ(ℙ¹×ℙ¹) − χ(Q) − χ(B) − χ(L) + χ(φ⁻¹(L)).
long chi_singular_model(const CoverGeometry& geom);

struct SurfaceClassification {
  long chi_singular = 0;
  long chi_smooth = 0;
  std::optional<long> blowup_count;
  std::string verdict;
  int increments = 0;
  int singular_fibers = 0;
};

SurfaceClassification classify_surface(long chi_singular, const std::vector<ResolutionRecord>& resolution,
                                       const std::vector<FiberClass>& fibers);

nlohmann::json to_json(const P1P1Point& p);
nlohmann::json to_json(const CoverGeometry& g);
nlohmann::json to_json(const SurfaceClassification& c);

}  // namespace charvar
