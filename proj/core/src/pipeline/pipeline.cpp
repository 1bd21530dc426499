#include "charvar/pipeline/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <sstream>

#include "charvar/errors.hpp"
#include "charvar/linkgroup/linkgroup.hpp"
#include "charvar/traceelim/traceelim.hpp"

namespace charvar {

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const IncompatibleFieldError*>(&e)) return "IncompatibleFieldError";
  if (dynamic_cast<const DivisionError*>(&e)) return "DivisionError";
  if (dynamic_cast<const UnsplittableFactorError*>(&e)) return "UnsplittableFactorError";
  if (dynamic_cast<const PositiveDimensionalError*>(&e)) return "PositiveDimensionalError";
  if (dynamic_cast<const ShapeError*>(&e)) return "ShapeError";
  if (dynamic_cast<const CapExceededError*>(&e)) return "CapExceededError";
  if (dynamic_cast<const InternalCheckError*>(&e)) return "InternalCheckError";
  if (dynamic_cast<const Error*>(&e)) return "Error";
  return "std::exception";
}

std::optional<std::string> SurfaceReport::verdict() const {
  std::optional<std::string> v;
  for (const auto& c : components) {
    if (!c.bundle || !c.bundle->classification) continue;
    const std::string& cv = c.bundle->classification->verdict;
    if (v && *v != cv) return std::nullopt;
    v = cv;
  }
  return v;
}

std::optional<Bidegree> annotated_canonical(int n) {
  static const std::map<int, Bidegree> table{{1, {2, 3}}, {2, {4, 5}}, {3, {6, 7}}, {4, {8, 9}}};
  auto it = table.find(n);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<StageFailure>& out) : out_(out) {}

  template <class F>
  bool run(const std::string& stage, F&& f) {
    try {
      f();
      return true;
    } catch (const std::exception& e) {
      out_.push_back({stage, error_kind(e), e.what()});
      return false;
    }
  }

 private:
  std::vector<StageFailure>& out_;
};

Poly cached_poly(PolyCache* cache, int n, const std::string& stage, const VarSet& vars,
                 const std::function<Poly()>& compute) {
  if (cache != nullptr) {
    if (auto text = cache->load(n, stage)) {
      try {
        return Poly::parse(*text, vars);
      } catch (const ParseError&) {
      }
    }
  }
  Poly p = compute();
  if (cache != nullptr) cache->store(n, stage, p.to_string());
  return p;
}

Bidegree trace_bidegree(const Poly& f) {
  const int z = trace_vars().require("z");
  Bidegree d{0, f.degree(z)};
  for (const auto& t : f.terms()) d.a = std::max(d.a, t.mono.e[0] + t.mono.e[1]);
  return d;
}

ConicBundleReport analyze_bundle(const Poly& component, const std::string& prefix, const PipelineOptions& opts,
                                 std::vector<StageFailure>& failures) {
  Recorder rec(failures);
  ConicBundleReport b;
  b.surface = bihomogenize(component);
  rec.run(prefix + "singular_points",
          [&] { b.singular_points = singular_points(b.surface, opts.policy, opts.caps); });
  rec.run(prefix + "fibers", [&] { b.fibers = classify_fibers(conic_matrix(b.surface), opts.policy); });
  if (b.singular_points) {
    rec.run(prefix + "resolution", [&] {
      std::vector<ResolutionRecord> out;
      for (const auto& p : *b.singular_points) out.push_back(resolve_point(b.surface, p, *b.singular_points, opts.policy));
      b.resolution = std::move(out);
    });
  }
  rec.run(prefix + "euler", [&] {
    b.cover = cover_geometry(split_even(b.surface), opts.policy, opts.caps);
    b.chi_singular = chi_singular_model(*b.cover);
  });
  if (b.chi_singular && b.resolution && b.fibers) {
    rec.run(prefix + "classification",
            [&] { b.classification = classify_surface(*b.chi_singular, *b.resolution, b.fibers->fibers); });
  }
  return b;
}

void analyze_components(SurfaceReport& r, const TracePoly& t, int n, const PipelineOptions& opts) {
  Recorder rec(r.failures);
  std::vector<Component> comps;
  if (!rec.run("components", [&] { comps = component_split(t, opts.caps); })) return;
  std::optional<Bidegree> canonical = n > 0 ? annotated_canonical(n) : std::nullopt;
  Bidegree total{0, 0};
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    ComponentReport cr;
    cr.polynomial = c.poly;
    cr.bidegree = c.bidegree;
    cr.multiplicity = c.multiplicity;
    cr.geometric_genus = geometric_genus(c.bidegree.a, c.bidegree.b);
    cr.canonical_annotated = canonical && *canonical == c.bidegree;
    total.a += c.bidegree.a * c.multiplicity;
    total.b += c.bidegree.b * c.multiplicity;
    if (c.bidegree.a == 2) {
      cr.bundle = analyze_bundle(c.poly, "component[" + std::to_string(i) + "].", opts, r.failures);
    }
    r.components.push_back(std::move(cr));
  }
  if (!(total == t.bidegree)) {
    r.failures.push_back({"components", "InternalCheckError",
                          "component bidegrees sum to " + total.to_string() + ", not " + t.bidegree.to_string()});
  }
}

}  // namespace

SurfaceReport run_pipeline(const PipelineSpec& spec, const PipelineOptions& opts) {
  SurfaceReport r;
  Recorder rec(r.failures);
  std::optional<TracePoly> trace;
  if (spec.kind == PipelineSpec::Kind::Polynomial) {
    r.label = "polynomial input";
    if (!rec.run("parse", [&] {
          Poly f = normalize_trace(Poly::parse(spec.text, trace_vars()));
          if (f.is_constant()) throw ShapeError("input polynomial is constant");
          trace = TracePoly{f, trace_bidegree(f), "input"};
        })) {
      return r;
    }
  } else {
    GroupWord w;
    int n = 0;
    if (spec.kind == PipelineSpec::Kind::N) {
      n = spec.n;
      r.label = "M_br(1/" + std::to_string(n) + ")";
      r.beyond_validated_range = n > opts.max_validated_n;
      if (!rec.run("word", [&] { w = surgery_word(n); })) return r;
    } else {
      r.label = "word input";
      if (!rec.run("word", [&] { w = GroupWord::parse(spec.text); })) return r;
    }
    r.word = w.to_string();
    PolyCache* cache = spec.kind == PipelineSpec::Kind::N ? opts.cache : nullptr;
    std::optional<Poly> p;
    if (!rec.run("relations", [&] {
          Poly p1 = cached_poly(cache, n, "p1", rep_vars(), [&] { return relation_polys(w).p1; });
          Poly p2 = cached_poly(cache, n, "p2", rep_vars(), [&] { return relation_polys(w).p2; });
          p = cached_poly(cache, n, "p", rep_vars(), [&] { return nonabelian_part(p1, p2).p; });
        })) {
      return r;
    }
    if (p->is_constant()) {
      r.nonabelian = false;
      return r;
    }
    if (!rec.run("trace", [&] {
          Poly f = cached_poly(cache, n, "ftilde", trace_vars(), [&] { return to_trace_coords(*p).ftilde; });
          if (!equal_up_to_unit(trace_substitute(f), *p)) {
            throw InternalCheckError("trace polynomial does not reproduce p");
          }
          trace = TracePoly{f, trace_bidegree(f), r.label};
        })) {
      return r;
    }
  }
  r.ftilde = trace->ftilde;
  r.bidegree = trace->bidegree;
  analyze_components(r, *trace, spec.kind == PipelineSpec::Kind::N ? spec.n : 0, opts);
  return r;
}

namespace {

nlohmann::json bundle_json(const ConicBundleReport& b) {
  nlohmann::json j;
  j["surface"] = b.surface.to_string();
  j["bidegree"] = {b.surface.bidegree().a, b.surface.bidegree().b};
  if (b.singular_points) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : *b.singular_points) pts.push_back(p.to_string());
    j["singular_points"] = pts;
  }
  if (b.fibers) {
    j["discriminant"] = b.fibers->discriminant.to_string();
    j["fibers"] = to_json(*b.fibers);
  }
  if (b.resolution) {
    nlohmann::json res = nlohmann::json::array();
    for (const auto& rr : *b.resolution) res.push_back(to_json(rr));
    j["resolution"] = res;
  }
  if (b.cover) j["cover"] = to_json(*b.cover);
  if (b.classification) j["classification"] = to_json(*b.classification);
  return j;
}

std::string bidegree_set(const std::vector<Bidegree>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + "}";
}

}  // namespace

nlohmann::json to_json(const SurfaceReport& r) {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["label"] = r.label;
  j["word"] = r.word;
  j["beyond_validated_range"] = r.beyond_validated_range;
  j["outcome"] = !r.nonabelian ? "no nonabelian component" : r.failures.empty() ? "complete" : "partial";
  j["ftilde"] = r.ftilde ? nlohmann::json(r.ftilde->to_string()) : nlohmann::json(nullptr);
  j["bidegree"] = r.bidegree ? nlohmann::json{r.bidegree->a, r.bidegree->b} : nlohmann::json(nullptr);
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components) {
    nlohmann::json cj{{"polynomial", c.polynomial.to_string()},
                      {"bidegree", {c.bidegree.a, c.bidegree.b}},
                      {"multiplicity", c.multiplicity},
                      {"geometric_genus", c.geometric_genus},
                      {"canonical", c.canonical_annotated ? "annotated" : "no"}};
    if (c.bundle) cj["conic_bundle"] = bundle_json(*c.bundle);
    comps.push_back(cj);
  }
  j["components"] = comps;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : r.failures) fails.push_back({{"stage", f.stage}, {"kind", f.kind}, {"message", f.message}});
  j["failures"] = fails;
  auto v = r.verdict();
  j["verdict"] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  return j;
}

std::string to_text(const SurfaceReport& r) {
  std::ostringstream os;
  os << r.label;
  if (r.beyond_validated_range) os << " (beyond validated range)";
  os << "\n";
  if (!r.word.empty()) os << "word: " << r.word << "\n";
  if (!r.nonabelian) os << "no nonabelian component\n";
  if (r.ftilde) os << "ftilde: " << r.ftilde->to_string() << "  bidegree " << r.bidegree->to_string() << "\n";
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    os << "component " << i + 1 << ": " << c.bidegree.to_string() << " p_g=" << c.geometric_genus;
    if (c.multiplicity > 1) os << " multiplicity " << c.multiplicity;
    if (c.canonical_annotated) os << " canonical (annotated)";
    os << "\n  " << c.polynomial.to_string() << "\n";
    if (!c.bundle) continue;
    const auto& b = *c.bundle;
    os << "  surface: " << b.surface.to_string() << "\n";
    if (b.singular_points) {
      os << "  singular points:";
      for (const auto& p : *b.singular_points) os << " " << p.to_string();
      os << "\n";
    }
    if (b.fibers) {
      os << "  discriminant: " << b.fibers->discriminant.to_string() << "\n";
      std::istringstream table(fiber_table_text(*b.fibers));
      for (std::string line; std::getline(table, line);) os << "    " << line << "\n";
    }
    if (b.resolution) {
      for (const auto& rr : *b.resolution) {
        os << "  blow-up at " << rr.point.to_string() << ": exceptional conic " << rr.conic.conic.to_string()
           << ", smooth " << (rr.smooth ? "yes" : "no") << ", chi +" << rr.chi_increment << "\n";
      }
    }
    if (b.cover) {
      os << "  chi(B)=" << b.cover->branch.chi << " chi(Q)=" << b.cover->infinite.chi_q
         << " chi(L)=" << b.cover->infinite.chi_l << " chi(preimage L)=" << b.cover->infinite.chi_preimage_l << "\n";
    }
    if (b.classification) {
      os << "  chi(S)=" << b.classification->chi_singular << " chi(resolved)=" << b.classification->chi_smooth
         << "  " << b.classification->verdict << "\n";
    }
  }
  for (const auto& f : r.failures) os << "FAILED " << f.stage << " [" << f.kind << "]: " << f.message << "\n";
  return os.str();
}

namespace {

struct ExpectedBundle {
  const char* polynomial;
  long chi;
  const char* verdict;
};

struct ExpectedRow {
  std::vector<Bidegree> bidegrees;
  Bidegree canonical;
  std::vector<ExpectedBundle> bundles;
};

const std::map<int, ExpectedRow>& reference_rows() {
  static const std::map<int, ExpectedRow> rows{
      {1,
       {{{2, 3}},
        {2, 3},
        {{"-w^3*x*y+w^2*x^2*z+w^2*y^2*z-w*x*y*z^2+u^2*(z^3-2*w^2*z)", 13, "P2 blown up at 10 points"}}}},
      {2,
       {{{2, 2}, {4, 5}}, {4, 5}, {{"w^2*x^2+w^2*y^2-w*x*y*z+u^2*(z^2-2*w^2)", 10, "P2 blown up at 7 points"}}}},
      {3,
       {{{2, 2}, {2, 2}, {6, 7}},
        {6, 7},
        {{"w^2*x^2+w^2*y^2-w*x*y*z+u^2*(z^2-3*w^2)", 10, "P2 blown up at 7 points"},
         {"w^2*x^2+w^2*y^2-w*x*y*z+u^2*(z^2-w^2)", 10, "P2 blown up at 7 points"}}}},
      {4,
       {{{2, 2}, {4, 4}, {8, 9}}, {8, 9}, {{"w^2*x^2+w^2*y^2-w*x*y*z+u^2*(z^2-2*w^2)", 10, "P2 blown up at 7 points"}}}},
  };
  return rows;
}

void diff_row(int n, const SurfaceReport& r, std::vector<TableCell>& cells) {
  const auto& rows = reference_rows();
  auto it = rows.find(n);
  if (it == rows.end()) return;
  const ExpectedRow& e = it->second;
  std::string row = r.label;
  std::vector<Bidegree> actual;
  std::string canonical = "missing";
  for (const auto& c : r.components) {
    for (int k = 0; k < c.multiplicity; ++k) actual.push_back(c.bidegree);
    if (c.bidegree == e.canonical) canonical = c.bidegree.to_string();
  }
  std::sort(actual.begin(), actual.end());
  auto expected = e.bidegrees;
  std::sort(expected.begin(), expected.end());
  cells.push_back({"components", row, "bidegrees", bidegree_set(expected), bidegree_set(actual), expected == actual});
  cells.push_back({"components", row, "canonical", e.canonical.to_string(), canonical,
                   canonical == e.canonical.to_string()});

  std::vector<const ComponentReport*> bundles;
  for (const auto& c : r.components) {
    if (c.bundle) bundles.push_back(&c);
  }
  for (std::size_t i = 0; i < e.bundles.size(); ++i) {
    const auto& eb = e.bundles[i];
    Poly ep = Poly::parse(eb.polynomial, biform_vars());
    const ComponentReport* match = nullptr;
    for (const auto* c : bundles) {
      if (equal_up_to_unit(c->bundle->surface.poly(), ep)) match = c;
    }
    std::string sub = row + (e.bundles.size() > 1 ? " #" + std::to_string(i + 1) : "");
    cells.push_back({"conic bundles", sub, "polynomial", ep.to_string(),
                     match ? match->bundle->surface.to_string() : "missing", match != nullptr});
    const SurfaceClassification* cls =
        match && match->bundle->classification ? &*match->bundle->classification : nullptr;
    std::string chi = cls ? std::to_string(cls->chi_smooth) : "missing";
    std::string verdict = cls ? cls->verdict : "missing";
    cells.push_back({"conic bundles", sub, "euler characteristic", std::to_string(eb.chi), chi,
                     chi == std::to_string(eb.chi)});
    cells.push_back({"conic bundles", sub, "surface", eb.verdict, verdict, verdict == eb.verdict});
  }
  if (bundles.size() != e.bundles.size()) {
    cells.push_back({"conic bundles", row, "count", std::to_string(e.bundles.size()), std::to_string(bundles.size()),
                     false});
  }
}

}  // namespace

bool TablesReport::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.match; });
}

TablesReport cmd_tables(const PipelineOptions& opts, int max_n) {
  TablesReport t;
  std::vector<std::future<SurfaceReport>> jobs;
  for (int n = 1; n <= max_n; ++n) {
    jobs.push_back(std::async(std::launch::async, [n, &opts] { return run_pipeline(PipelineSpec::surgery(n), opts); }));
  }
  for (int n = 1; n <= max_n; ++n) {
    t.rows.push_back(jobs[static_cast<std::size_t>(n - 1)].get());
    diff_row(n, t.rows.back(), t.cells);
  }
  return t;
}

nlohmann::json to_json(const TablesReport& t) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) rows.push_back(to_json(r));
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : t.cells) {
    cells.push_back({{"table", c.table},
                     {"row", c.row},
                     {"column", c.column},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"match", c.match}});
  }
  return {{"schema_version", kSchemaVersion}, {"rows", rows}, {"cells", cells}, {"all_match", t.all_match()}};
}

std::string to_text(const TablesReport& t) {
  std::ostringstream os;
  std::string current;
  auto cells = t.cells;
  std::stable_sort(cells.begin(), cells.end(), [](const TableCell& a, const TableCell& b) { return a.table < b.table; });
  for (const auto& c : cells) {
    if (c.table != current) {
      current = c.table;
      os << (os.tellp() > 0 ? "\n" : "") << "== " << current << " ==\n";
    }
    os << (c.match ? "match    " : "MISMATCH ") << c.row << " | " << c.column << " | " << c.actual;
    if (!c.match) os << " (expected " << c.expected << ")";
    os << "\n";
  }
  for (const auto& r : t.rows) {
    if (r.beyond_validated_range) os << r.label << ": beyond validated range, no reference values\n";
    for (const auto& f : r.failures) os << r.label << " FAILED " << f.stage << " [" << f.kind << "]: " << f.message << "\n";
  }
  return os.str();
}

}  // namespace charvar
