#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/projmodel/projmodel.hpp"

namespace charvar {

/// F restricted to an affine chart and translated so that a point sits at
/// the origin.
struct LocalModel {
  Poly f;                    ///< in the three chart variables
  BiPoint point;
  int p2_chart = 0;          ///< (x,y,u,z,w) index set to 1 in ℙ²
  int p1_chart = 3;          ///< (x,y,u,z,w) index set to 1 in ℙ¹
  std::array<int, 3> vars{};       ///< (x,y,u,z,w) indices of the local variables
  std::array<Scalar, 3> offset{};  ///< chart coordinates of the point

  /// The point of ℙ²×ℙ¹ with the given local coordinates.
  BiPoint to_global(const std::vector<Scalar>& local) const;
};

/// Uses the chart where the first nonzero coordinate of each factor of p is
/// 1. Throws ShapeError when p is not a singular point of F.
LocalModel localize(const BiForm& F, const BiPoint& p);

struct BlowupChartResult {
  int chart = 0;             ///< 0: a=1, 1: b=1, 2: c=1
  /// Variables: the chart variable keeps its local name; the other two are
  /// the exceptional coordinates among a, b, c.
  Poly strict_transform;
  int multiplicity = 2;
  /// strict_transform restricted to the exceptional plane, in (a,b,c).
  Poly exceptional_curve;
};

/// Variables (a, b, c) of the exceptional plane.
const VarSet& exceptional_vars();

/// Blow-up of the origin in the three standard charts. Throws ShapeError when
/// the origin is not a singular point or a local variable is named a, b or c.
std::array<BlowupChartResult, 3> blow_up_origin(const Poly& f_local);

/// Substituting the chart map of r into f_local gives v^k · strict transform.
bool blowup_identity_holds(const Poly& f_local, const BlowupChartResult& r);

struct ExceptionalConic {
  Poly conic;  ///< homogeneous quadratic in (a,b,c)
  int rank = 3;
  int genus = 0;
};

/// Glues the three chart curves into one projective curve. Throws ShapeError
/// when the charts disagree, the curve is not a conic, or the conic is not
/// smooth (rank < 3).
ExceptionalConic exceptional_conic(const std::array<BlowupChartResult, 3>& results);

struct AuditResult {
  bool smooth = true;
  bool positive_dimensional = false;
  /// Singular points of the strict transform that are not accounted for.
  std::vector<std::string> offending;
};

/// Singular points of the strict transform must blow down to points of
/// `other_sing` (never to the blown-up point itself).
AuditResult smoothness_audit(const BlowupChartResult& r, const LocalModel& model,
                             const std::vector<BiPoint>& other_sing, const FieldPolicy& policy = {});
/// Same audit for a bare local equation: any singular point is offending.
AuditResult smoothness_audit(const BlowupChartResult& r, const FieldPolicy& policy = {});

enum class PointKind { Smooth, Singular };
/// 1 for a smooth point; 2g+1 for a singular point resolved by one blow-up.
int chi_increment(int genus, PointKind kind);

struct ResolutionRecord {
  BiPoint point;
  LocalModel local;
  std::array<BlowupChartResult, 3> charts;
  ExceptionalConic conic;
  bool smooth = false;
  int chi_increment = 0;
};

/// Runs localize, blow-up, conic gluing and the audit of all three charts.
ResolutionRecord resolve_point(const BiForm& F, const BiPoint& p, const std::vector<BiPoint>& all_sing,
                               const FieldPolicy& policy = {});

nlohmann::json to_json(const ResolutionRecord& r);

}  // namespace charvar
