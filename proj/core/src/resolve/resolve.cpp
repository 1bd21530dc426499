#include "charvar/resolve/resolve.hpp"

#include <algorithm>

#include "charvar/errors.hpp"
#include "charvar/poly/solve.hpp"

namespace charvar {

namespace {

const char* kExc[3] = {"a", "b", "c"};

int first_nonzero(const Scalar* v, int n) {
  for (int i = 0; i < n; ++i) {
    if (!v[i].is_zero()) return i;
  }
  throw ShapeError("projective point with all coordinates zero");
}

VarSet chart_vars(const VarSet& local, int i) {
  std::vector<std::string> names;
  for (int j = 0; j < 3; ++j) names.push_back(j == i ? local.name(j) : kExc[j]);
  return VarSet(names);
}

std::vector<Poly> chart_images(const VarSet& target, int i) {
  std::vector<Poly> images;
  Poly vi = Poly::variable(target, i);
  for (int j = 0; j < 3; ++j) images.push_back(j == i ? vi : Poly::variable(target, j) * vi);
  return images;
}

Matrix quadric_matrix(const Poly& q) {
  Matrix M(3, 3);
  Scalar half(Rational(BigInt(1), BigInt(2)));
  for (const auto& t : q.terms()) {
    std::vector<std::size_t> idx;
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < t.mono.e[v]; ++k) idx.push_back(static_cast<std::size_t>(v));
    }
    if (idx.size() != 2) throw ShapeError("not a quadratic form: " + q.to_string());
    if (idx[0] == idx[1]) {
      M(idx[0], idx[0]) += t.coeff;
    } else {
      M(idx[0], idx[1]) += t.coeff * half;
      M(idx[1], idx[0]) += t.coeff * half;
    }
  }
  return M;
}

std::vector<Poly> singular_system(const Poly& f) {
  std::vector<Poly> eqs{f};
  for (int v = 0; v < f.nvars(); ++v) eqs.push_back(f.derivative(v));
  return eqs;
}

}  // namespace

BiPoint LocalModel::to_global(const std::vector<Scalar>& local) const {
  std::vector<Scalar> full(5, Scalar(0));
  full[static_cast<std::size_t>(p2_chart)] = Scalar(1);
  full[static_cast<std::size_t>(p1_chart)] = Scalar(1);
  for (std::size_t k = 0; k < 3; ++k) full[static_cast<std::size_t>(vars[k])] = local[k] + offset[k];
  return BiPoint({full[0], full[1], full[2]}, {full[3], full[4]});
}

LocalModel localize(const BiForm& F, const BiPoint& p) {
  LocalModel lm;
  lm.point = p;
  lm.p2_chart = first_nonzero(p.p2().data(), 3);
  lm.p1_chart = 3 + first_nonzero(p.p1().data(), 2);
  auto c = p.coords();
  std::size_t k = 0;
  for (int v = 0; v < 5; ++v) {
    if (v == lm.p2_chart || v == lm.p1_chart) continue;
    lm.vars[k] = v;
    lm.offset[k] = c[static_cast<std::size_t>(v)];
    ++k;
  }
  Poly g = chart(F.poly(), lm.p2_chart, lm.p1_chart);
  const VarSet& vs = g.vars();
  std::vector<Poly> images;
  for (int j = 0; j < 3; ++j) {
    images.push_back(Poly::variable(vs, j) + Poly::constant(vs, lm.offset[static_cast<std::size_t>(j)]));
  }
  lm.f = compose(g, vs, images);
  if (!lm.f.is_zero() && lm.f.low_total_degree() < 2) {
    throw ShapeError(p.to_string() + " is not a singular point of the form");
  }
  return lm;
}

const VarSet& exceptional_vars() {
  static const VarSet vs{"a", "b", "c"};
  return vs;
}

std::array<BlowupChartResult, 3> blow_up_origin(const Poly& f_local) {
  if (f_local.nvars() != 3) throw ShapeError("blow-up needs a polynomial in three variables");
  for (const char* n : kExc) {
    if (f_local.vars().index_of(n)) throw ShapeError(std::string("local variable may not be named ") + n);
  }
  if (f_local.is_zero()) throw ShapeError("blow-up of the zero polynomial");
  int k = f_local.low_total_degree();
  if (k < 2) throw ShapeError("origin is not a singular point");
  std::array<BlowupChartResult, 3> out;
  for (int i = 0; i < 3; ++i) {
    VarSet vs = chart_vars(f_local.vars(), i);
    Poly sub = compose(f_local, vs, chart_images(vs, i));
    Monomial m;
    m.e[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(-k);
    Poly strict = sub.mul_monomial(m);
    if (!strict.is_polynomial()) throw InternalCheckError("blow-up substitution is not divisible by v^k");
    BlowupChartResult r;
    r.chart = i;
    r.multiplicity = k;
    r.strict_transform = strict;
    r.exceptional_curve = embed(strict.partial_eval(i, Scalar(0)), exceptional_vars());
    out[static_cast<std::size_t>(i)] = std::move(r);
  }
  return out;
}

bool blowup_identity_holds(const Poly& f_local, const BlowupChartResult& r) {
  const VarSet& vs = r.strict_transform.vars();
  Poly sub = compose(f_local, vs, chart_images(vs, r.chart));
  Monomial m;
  m.e[static_cast<std::size_t>(r.chart)] = static_cast<std::int16_t>(r.multiplicity);
  return sub == r.strict_transform.mul_monomial(m);
}

ExceptionalConic exceptional_conic(const std::array<BlowupChartResult, 3>& results) {
  int k = results[0].multiplicity;
  std::vector<Poly> homog;
  for (const auto& r : results) {
    std::vector<Poly::Term> terms;
    for (const auto& t : r.exceptional_curve.terms()) {
      Poly::Term h = t;
      int rest = k - t.mono.total();
      if (rest < 0) throw ShapeError("exceptional curve has degree above the multiplicity");
      h.mono.e[static_cast<std::size_t>(r.chart)] = static_cast<std::int16_t>(rest);
      terms.push_back(h);
    }
    homog.push_back(normalize(Poly::from_terms(exceptional_vars(), std::move(terms))));
  }
  if (!(homog[0] == homog[1]) || !(homog[0] == homog[2])) {
    throw ShapeError("exceptional chart curves do not glue: " + homog[0].to_string() + ", " +
                     homog[1].to_string() + ", " + homog[2].to_string());
  }
  if (k != 2) throw ShapeError("exceptional curve of degree " + std::to_string(k) + " needs further analysis");
  ExceptionalConic out;
  out.conic = homog[0];
  out.rank = quadric_matrix(out.conic).rank();
  if (out.rank < 3) {
    throw ShapeError("exceptional conic " + out.conic.to_string() + " is singular (rank " + std::to_string(out.rank) +
                     "); needs further analysis");
  }
  out.genus = 0;
  return out;
}

AuditResult smoothness_audit(const BlowupChartResult& r, const LocalModel& model,
                             const std::vector<BiPoint>& other_sing, const FieldPolicy& policy) {
  AuditResult res;
  std::vector<std::vector<Scalar>> sols;
  try {
    sols = solve_zero_dimensional(singular_system(r.strict_transform), policy);
  } catch (const PositiveDimensionalError&) {
    res.smooth = false;
    res.positive_dimensional = true;
    res.offending.push_back("positive-dimensional singular locus");
    return res;
  }
  for (const auto& s : sols) {
    const Scalar& vi = s[static_cast<std::size_t>(r.chart)];
    std::vector<Scalar> local(3);
    for (std::size_t j = 0; j < 3; ++j) local[j] = j == static_cast<std::size_t>(r.chart) ? vi : s[j] * vi;
    BiPoint g = model.to_global(local);
    bool known = !(g == model.point) && std::find(other_sing.begin(), other_sing.end(), g) != other_sing.end();
    if (!known) {
      res.smooth = false;
      res.offending.push_back(g.to_string());
    }
  }
  return res;
}

AuditResult smoothness_audit(const BlowupChartResult& r, const FieldPolicy& policy) {
  AuditResult res;
  try {
    auto sols = solve_zero_dimensional(singular_system(r.strict_transform), policy);
    for (const auto& s : sols) {
      std::string t = "(";
      for (std::size_t j = 0; j < s.size(); ++j) t += (j ? "," : "") + s[j].to_string();
      res.offending.push_back(t + ")");
    }
    res.smooth = sols.empty();
  } catch (const PositiveDimensionalError&) {
    res.smooth = false;
    res.positive_dimensional = true;
    res.offending.push_back("positive-dimensional singular locus");
  }
  return res;
}

int chi_increment(int genus, PointKind kind) {
  if (genus < 0) throw ShapeError("genus must be non-negative");
  return kind == PointKind::Smooth ? 1 : 2 * genus + 1;
}

ResolutionRecord resolve_point(const BiForm& F, const BiPoint& p, const std::vector<BiPoint>& all_sing,
                               const FieldPolicy& policy) {
  ResolutionRecord rec;
  rec.point = p;
  rec.local = localize(F, p);
  rec.charts = blow_up_origin(rec.local.f);
  for (const auto& c : rec.charts) {
    if (!blowup_identity_holds(rec.local.f, c)) throw InternalCheckError("blow-up identity fails");
  }
  rec.conic = exceptional_conic(rec.charts);
  std::vector<BiPoint> others;
  for (const auto& q : all_sing) {
    if (!(q == p)) others.push_back(q);
  }
  rec.smooth = true;
  for (const auto& c : rec.charts) rec.smooth = rec.smooth && smoothness_audit(c, rec.local, others, policy).smooth;
  rec.chi_increment = chi_increment(rec.conic.genus, PointKind::Singular);
  return rec;
}

nlohmann::json to_json(const ResolutionRecord& r) {
  nlohmann::json charts = nlohmann::json::array();
  for (const auto& c : r.charts) {
    charts.push_back({{"chart", std::string(kExc[c.chart]) + "=1"},
                      {"strict_transform", c.strict_transform.to_string()},
                      {"multiplicity", c.multiplicity},
                      {"exceptional_curve", c.exceptional_curve.to_string()}});
  }
  return {{"point", to_json(r.point)},
          {"local_equation", r.local.f.to_string()},
          {"charts", charts},
          {"conic", r.conic.conic.to_string()},
          {"conic_rank", r.conic.rank},
          {"genus", r.conic.genus},
          {"smooth", r.smooth},
          {"chi_increment", r.chi_increment}};
}

}  // namespace charvar
