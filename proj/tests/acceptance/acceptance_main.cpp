// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "charvar/errors.hpp"
#include "charvar/euler/euler.hpp"
#include "charvar/linkgroup/linkgroup.hpp"
#include "charvar/pipeline/pipeline.hpp"
#include "charvar/poly/gcd.hpp"
#include "charvar/traceelim/traceelim.hpp"
#include "support/properties.hpp"
#include "support/reference.hpp"

using namespace charvar;

namespace {

struct Check {
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) problems.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Check&)> body;
};

Poly rep(const char* s) { return Poly::parse(s, rep_vars()); }

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

const SurfaceReport& whitehead_report() {
  static const SurfaceReport r = run_pipeline(PipelineSpec::surgery(1));
  return r;
}

const ConicBundleReport& whitehead_bundle() { return *whitehead_report().components.at(0).bundle; }

void criterion1(Check& c) {
  GroupWord w = surgery_word(1);
  c.expect(w == GroupWord::parse(testref::kWhiteheadWord), "surgery_word(1) = " + w.to_string());
  c.note(w.to_string());
}

void criterion2(Check& c) {
  RelationPolys rp = relation_polys(surgery_word(1));
  c.expect(equal_up_to_unit(rp.p1, rep(testref::kWhiteheadP1)), "p1 differs from the reference");
  c.expect(equal_up_to_unit(rp.p2, rep(testref::kWhiteheadP2)), "p2 differs from the reference");
  NonabelianPart na = nonabelian_part(rp.p1, rp.p2);
  c.expect(equal_up_to_unit(na.p, rep(testref::kWhiteheadCore)), "p = gcd(p1, p2) differs from the reference");
  c.expect(na.g1 * na.p == rp.p1 && na.g2 * na.p == rp.p2, "cofactor products do not reproduce p1, p2 exactly");
  c.expect(equal_up_to_unit(na.g1, rep("r*s")), "g1 = " + na.g1.to_string() + " is not rs up to unit");
  c.expect(equal_up_to_unit(na.g2, rep("s^2-1")), "g2 = " + na.g2.to_string() + " is not s^2-1 up to unit");
  c.note("g1=" + na.g1.to_string() + " g2=" + na.g2.to_string() + " (Laurent units)");
}

void criterion3(Check& c) {
  RelationPolys rp = relation_polys(surgery_word(1));
  Poly p = nonabelian_part(rp.p1, rp.p2).p;
  TracePoly t = to_trace_coords(p);
  c.expect(t.ftilde == Poly::parse(testref::kWhiteheadTrace, trace_vars()), "ftilde = " + t.ftilde.to_string());
  c.expect(equal_up_to_unit(trace_substitute(t.ftilde), p), "back-substitution identity fails");
  c.note(t.ftilde.to_string());
}

void criterion4(Check& c) {
  const auto& b = whitehead_bundle();
  c.expect(b.surface.poly() == Poly::parse(testref::kWhiteheadSurface, biform_vars()),
           "surface = " + b.surface.to_string());
  c.expect(b.surface.bidegree() == Bidegree{2, 3}, "bidegree " + b.surface.bidegree().to_string());
  std::set<std::string> got;
  if (b.singular_points) {
    for (const auto& p : *b.singular_points) got.insert(p.to_string());
  }
  std::set<std::string> want{"[1,0,0:1,0]", "[0,1,0:1,0]", "[1,-1,0:1,-1]", "[1,1,0:1,1]"};
  c.expect(got == want, "singular points differ");
  c.note(std::to_string(got.size()) + " singular points");
}

void criterion5(Check& c) {
  const auto& b = whitehead_bundle();
  if (!b.fibers) {
    c.expect(false, "no fiber table");
    return;
  }
  int degenerate = 0;
  int double_lines = 0;
  int mult = 0;
  bool double_at_infinity = false;
  for (const auto& f : b.fibers->fibers) {
    mult += f.multiplicity;
    if (f.kind == FiberKind::Degenerate && f.rank == 2) ++degenerate;
    if (f.kind == FiberKind::DoubleLine && f.rank == 1) {
      ++double_lines;
      double_at_infinity = f.zw[0] == Scalar(1) && f.zw[1].is_zero();
    }
  }
  int disc_degree = b.fibers->discriminant.total_degree();
  c.expect(b.fibers->fibers.size() == 6, std::to_string(b.fibers->fibers.size()) + " non-smooth fibers");
  c.expect(double_lines == 1 && double_at_infinity, "double line fiber is not unique at [1,0]");
  c.expect(degenerate == 5, std::to_string(degenerate) + " rank-2 fibers");
  c.expect(disc_degree == 9 && mult == 9, "discriminant degree " + std::to_string(disc_degree) +
                                              ", multiplicities sum " + std::to_string(mult));
  c.note("6 fibers, discriminant degree 9");
}

void criterion6(Check& c) {
  const auto& b = whitehead_bundle();
  if (!b.resolution) {
    c.expect(false, "no resolution records");
    return;
  }
  int total = 0;
  bool saw_s1 = false;
  for (const auto& r : *b.resolution) {
    total += r.chi_increment;
    c.expect(r.smooth && r.conic.rank == 3 && r.conic.genus == 0, "point " + r.point.to_string() + " not resolved");
    if (r.point.to_string() == "[1,0,0:1,0]") {
      saw_s1 = true;
      Poly expected = Poly::parse(testref::kS1ChartAConic, exceptional_vars());
      c.expect(equal_up_to_unit(r.charts[0].exceptional_curve, expected) &&
                   r.charts[0].exceptional_curve.total_degree() == 2,
               "chart a=1 conic at s1 is " + r.charts[0].exceptional_curve.to_string());
      c.note("s1 chart a=1: " + r.charts[0].exceptional_curve.to_string());
    }
  }
  c.expect(saw_s1, "s1 not among the resolved points");
  c.expect(total == 4, "total increment " + std::to_string(total));
}

void criterion7(Check& c) {
  const auto& b = whitehead_bundle();
  c.expect(b.cover.has_value() && b.classification.has_value(), "missing cover geometry or classification");
  if (!b.cover || !b.classification) return;
  c.expect(b.cover->branch.chi == 2, "chi(B) = " + std::to_string(b.cover->branch.chi));
  c.expect(b.cover->infinite.chi_q == 0, "chi(Q) = " + std::to_string(b.cover->infinite.chi_q));
  c.expect(b.cover->infinite.chi_l == 6, "chi(L) = " + std::to_string(b.cover->infinite.chi_l));
  c.expect(b.cover->infinite.chi_preimage_l == 9, "chi(preimage L) = " + std::to_string(b.cover->infinite.chi_preimage_l));
  c.expect(b.classification->chi_singular == 9, "chi(S) = " + std::to_string(b.classification->chi_singular));
  c.expect(b.classification->chi_smooth == 13, "chi(resolved) = " + std::to_string(b.classification->chi_smooth));
  c.expect(b.classification->verdict == "P2 blown up at 10 points", "verdict " + b.classification->verdict);
  c.expect(whitehead_report().failures.empty(), "pipeline recorded failures");
  c.note(b.classification->verdict);
}

void criterion8(Check& c) {
  struct Row {
    int n;
    std::multiset<Bidegree> bidegrees;
    std::vector<const char*> surfaces;
  };
  const std::vector<Row> rows{
      {2, {{2, 2}, {4, 5}}, {testref::kSurgery2Surface}},
      {3, {{2, 2}, {2, 2}, {6, 7}}, {testref::kSurgery3SurfaceA, testref::kSurgery3SurfaceB}},
      {4, {{2, 2}, {4, 4}, {8, 9}}, {testref::kSurgery2Surface}},
  };
  for (const auto& row : rows) {
    SurfaceReport r = run_pipeline(PipelineSpec::surgery(row.n));
    std::string tag = "n=" + std::to_string(row.n) + ": ";
    c.expect(r.failures.empty(), tag + "pipeline recorded failures");
    std::multiset<Bidegree> got;
    std::vector<const ConicBundleReport*> bundles;
    for (const auto& comp : r.components) {
      for (int k = 0; k < comp.multiplicity; ++k) got.insert(comp.bidegree);
      if (comp.bundle) bundles.push_back(&*comp.bundle);
    }
    c.expect(got == row.bidegrees, tag + "component bidegrees differ");
    c.expect(bundles.size() == row.surfaces.size(), tag + "wrong number of (2,b) components");
    for (const char* s : row.surfaces) {
      Poly want = Poly::parse(s, biform_vars());
      const ConicBundleReport* match = nullptr;
      for (const auto* b : bundles) {
        if (equal_up_to_unit(b->surface.poly(), want)) match = b;
      }
      c.expect(match != nullptr, tag + "no component matches " + std::string(s));
      if (!match) continue;
      bool two_conics = match->singular_points && match->singular_points->size() == 2 && match->resolution &&
                        match->resolution->size() == 2;
      if (two_conics) {
        for (const auto& rr : *match->resolution) two_conics = two_conics && rr.smooth && rr.conic.rank == 3;
      }
      c.expect(two_conics, tag + "expected two singular points resolving to conics");
      bool chi_ok = match->classification && match->classification->chi_singular == 8 &&
                    match->classification->chi_smooth == 10 &&
                    match->classification->verdict == "P2 blown up at 7 points";
      c.expect(chi_ok, tag + "chi pair or verdict differs");
    }
  }
  c.note("n=2,3,4 chi (8,10), P2 blown up at 7 points");
}

void criterion9(Check& c) {
  c.expect(geometric_genus(2, 3) == 0, "p_g(2,3)");
  c.expect(geometric_genus(3, 2) == 1, "p_g(3,2)");
  c.expect(intersection_number({1, 1}, {1, 1}) == 2, "(1,1).(1,1)");
  c.expect(intersection_number({0, 1}, {1, 1}) == 1, "(0,1).(1,1)");
  // The Whitehead branch curve realizes these counts point by point.
  const auto& b = whitehead_bundle();
  if (b.cover) {
    const auto& comps = b.cover->branch.components;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        long expected = intersection_number(comps[i].bidegree, comps[j].bidegree);
        long count = 0;
        for (const auto& x : b.cover->branch.intersections) {
          if (eval_at(comps[i].factor, x.point).is_zero() && eval_at(comps[j].factor, x.point).is_zero()) ++count;
        }
        c.expect(count == expected, "branch components " + comps[i].factor.to_string() + " and " +
                                        comps[j].factor.to_string() + " meet in " + std::to_string(count) +
                                        " points");
      }
    }
  }
}

void criterion10(Check& c) {
  struct Suite {
    const char* name;
    std::function<props::Outcome()> run;
    int min_cases;
  };
  BiForm wh = BiForm::parse(testref::kWhiteheadSurface);
  BiForm n2 = BiForm::parse(testref::kSurgery2Surface);
  const std::vector<Suite> suites{
      {"evaluation homomorphism", [] { return props::evaluation_homomorphism(101, 120); }, 100},
      {"gcd divides", [] { return props::gcd_divides(202, 60); }, 40},
      {"Euler relations", [] { return props::euler_relations(303, 60); }, 40},
      {"blow-up identity", [] { return props::blowup_identity(404, 60); }, 40},
      {"factorization by division", [] { return props::factorization_by_division(505, 40); }, 30},
      {"fiber dichotomy (Whitehead)", [&] { return props::fiber_dichotomy(wh, 606, 200); }, 200},
      {"fiber dichotomy (n=2)", [&] { return props::fiber_dichotomy(n2, 707, 200); }, 200},
      {"deterministic report", [] { return props::deterministic_report(testref::kSurgery2Trace); }, 1},
  };
  for (const auto& s : suites) {
    props::Outcome o = s.run();
    c.expect(o.failures == 0 && o.cases >= s.min_cases,
             std::string(s.name) + ": " + std::to_string(o.failures) + "/" + std::to_string(o.cases) + " failed" +
                 (o.first_failure.empty() ? "" : " (" + o.first_failure + ")"));
    c.note(std::string(s.name) + " " + std::to_string(o.cases));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Whitehead surgery word", 1, criterion1},
      {2, "relation polynomials, gcd and cofactors", 5, criterion2},
      {3, "character polynomial and back-substitution", 10, criterion3},
      {4, "projective model and singular points", 30, criterion4},
      {5, "fiber classification", 30, criterion5},
      {6, "blow-up resolution", 30, criterion6},
      {7, "Euler assembly and verdict", 120, criterion7},
      {8, "surgery table n=2..4", 1800, criterion8},
      {9, "genus and intersection formulas", 5, criterion9},
      {10, "property suites", 600, criterion10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs <= cr.budget_seconds, "took " + std::to_string(secs) + " s");
    bool pass = c.problems.empty();
    if (!pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << " criterion " << cr.id << ": " << cr.title << " [" << secs << " s]";
    if (pass && !c.notes.empty()) line << " -- " << join(c.notes, "; ");
    if (!pass) line << " -- " << join(c.problems, "; ");
    std::cout << line.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
