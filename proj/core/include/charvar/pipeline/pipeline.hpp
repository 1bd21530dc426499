#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charvar/euler/euler.hpp"
#include "charvar/pipeline/cache.hpp"
#include "charvar/projmodel/projmodel.hpp"
#include "charvar/resolve/resolve.hpp"

namespace charvar {

inline constexpr int kSchemaVersion = 1;

struct PipelineSpec {
  enum class Kind { N, Word, Polynomial };
  Kind kind = Kind::N;
  int n = 1;
  std::string text;

  static PipelineSpec surgery(int n) { return {Kind::N, n, ""}; }
  static PipelineSpec word(std::string w) { return {Kind::Word, 0, std::move(w)}; }
  static PipelineSpec polynomial(std::string p) { return {Kind::Polynomial, 0, std::move(p)}; }
};

struct PipelineOptions {
  FieldPolicy policy;
  FactorCaps caps;
  PolyCache* cache = nullptr;
  int max_validated_n = 4;
};

struct StageFailure {
  std::string stage;
  std::string kind;
  std::string message;
};

/// Name of the most specific error class, e.g. "UnsplittableFactorError".
std::string error_kind(const std::exception& e);

struct ConicBundleReport {
  BiForm surface;
  std::optional<std::vector<BiPoint>> singular_points;
  std::optional<FiberTable> fibers;
  std::optional<std::vector<ResolutionRecord>> resolution;
  std::optional<CoverGeometry> cover;
  std::optional<long> chi_singular;
  std::optional<SurfaceClassification> classification;
};

struct ComponentReport {
  Poly polynomial;  ///< in (x,y,z)
  Bidegree bidegree;
  int multiplicity = 1;
  long geometric_genus = 0;
  bool canonical_annotated = false;
  std::optional<ConicBundleReport> bundle;  ///< only for bidegree (2,b)
};

struct SurfaceReport {
  std::string label;
  std::string word;
  std::optional<Poly> ftilde;
  std::optional<Bidegree> bidegree;
  bool beyond_validated_range = false;
  bool nonabelian = true;
  std::vector<ComponentReport> components;
  std::vector<StageFailure> failures;

  /// The common verdict of all classified components, if they agree.
  std::optional<std::string> verdict() const;
};

/// Canonical component bidegree from the embedded annotation table (n ≤ 4).
std::optional<Bidegree> annotated_canonical(int n);

/// Runs every stage; stage errors are recorded in `failures` and the
/// remaining independent stages still run.
SurfaceReport run_pipeline(const PipelineSpec& spec, const PipelineOptions& opts = {});

nlohmann::json to_json(const SurfaceReport& r);
std::string to_text(const SurfaceReport& r);

struct TableCell {
  std::string table;
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;
  bool match = false;
};

struct TablesReport {
  std::vector<SurfaceReport> rows;
  std::vector<TableCell> cells;
  bool all_match() const;
};

/// Recomputes the component table and the conic bundle table for
/// n = 1..max_n (rows concurrently) and diffs them against the embedded
/// reference values. Rows above the validated range have no reference.
TablesReport cmd_tables(const PipelineOptions& opts = {}, int max_n = 4);

nlohmann::json to_json(const TablesReport& t);
std::string to_text(const TablesReport& t);

}  // namespace charvar
