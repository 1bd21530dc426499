#include "charvar/projmodel/projmodel.hpp"

#include <algorithm>
#include <future>
#include <iomanip>
#include <sstream>

#include "charvar/errors.hpp"
#include "charvar/poly/solve.hpp"

namespace charvar {

namespace {

constexpr int Z = 3, W = 4;

bool vec_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return a.size() < b.size();
}

std::string join(const std::vector<Scalar>& v, std::size_t from, std::size_t to) {
  std::string s;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) s += ",";
    s += v[i].to_string();
  }
  return s;
}

}  // namespace

std::vector<Scalar> normalize_projective(std::vector<Scalar> v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) throw ShapeError("projective point with all coordinates zero");
  Scalar inv = it->inverse();
  for (auto& s : v) s *= inv;
  return v;
}

BiPoint::BiPoint(std::array<Scalar, 3> p2, std::array<Scalar, 2> p1) {
  auto a = normalize_projective({p2[0], p2[1], p2[2]});
  auto b = normalize_projective({p1[0], p1[1]});
  p2_ = {a[0], a[1], a[2]};
  p1_ = {b[0], b[1]};
}

std::vector<Scalar> BiPoint::coords() const { return {p2_[0], p2_[1], p2_[2], p1_[0], p1_[1]}; }

std::string BiPoint::to_string() const {
  auto c = coords();
  return "[" + join(c, 0, 3) + ":" + join(c, 3, 5) + "]";
}

bool operator<(const BiPoint& a, const BiPoint& b) { return vec_less(a.coords(), b.coords()); }

const VarSet& base_vars() {
  static const VarSet vs{"z", "w"};
  return vs;
}

Poly ConicMatrix::det() const {
  const auto& a = m;
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix ConicMatrix::at(const Scalar& z, const Scalar& w) const {
  Matrix out(3, 3);
  std::vector<Scalar> pt{z, w};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = m[i][j].eval(pt);
  }
  return out;
}

Poly ConicMatrix::quadratic_form() const {
  const VarSet& vs = biform_vars();
  Poly out(vs);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Poly e = compose(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], vs,
                       {Poly::variable(vs, Z), Poly::variable(vs, W)});
      out += e * Poly::variable(vs, i) * Poly::variable(vs, j);
    }
  }
  return out;
}

ConicMatrix conic_matrix(const BiForm& F) {
  if (F.bidegree().a != 2) throw ShapeError("conic matrix needs bidegree (2,b), got " + F.bidegree().to_string());
  const VarSet& zw = base_vars();
  ConicMatrix M;
  for (auto& row : M.m) row.fill(Poly(zw));
  for (const auto& t : F.poly().terms()) {
    std::vector<int> idx;
    for (int v = 0; v < 3; ++v) {
      for (int k = 0; k < t.mono.e[v]; ++k) idx.push_back(v);
    }
    Monomial zm;
    zm.e[0] = t.mono.e[Z];
    zm.e[1] = t.mono.e[W];
    auto i = static_cast<std::size_t>(idx[0]);
    auto j = static_cast<std::size_t>(idx[1]);
    if (i == j) {
      M.m[i][i] += Poly::monomial(zw, zm, t.coeff);
    } else {
      Poly half = Poly::monomial(zw, zm, t.coeff * Scalar(Rational(BigInt(1), BigInt(2))));
      M.m[i][j] += half;
      M.m[j][i] += half;
    }
  }
  if (!(M.quadratic_form() == F.poly())) throw InternalCheckError("conic matrix does not reconstruct the form");
  return M;
}

std::string to_string(FiberKind k) {
  switch (k) {
    case FiberKind::Smooth:
      return "smooth";
    case FiberKind::Degenerate:
      return "degenerate";
    case FiberKind::DoubleLine:
      return "double line";
  }
  return "?";
}

std::vector<std::pair<std::array<Scalar, 2>, int>> binary_form_roots(const Poly& form, const FieldPolicy& policy) {
  if (form.is_zero()) throw ShapeError("roots of the zero binary form");
  std::vector<std::pair<std::array<Scalar, 2>, int>> out;
  int k = form.min_degree(1);
  if (k > 0) out.push_back({{Scalar(1), Scalar(0)}, k});
  Poly affine = form.partial_eval(1, Scalar(1));
  if (affine.degree(0) > 0) {
    RootResult rr = univariate_roots(UPoly::from_poly(affine, 0), policy);
    if (!rr.unsplit.empty()) {
      throw UnsplittableFactorError("binary form has roots outside the admissible fields",
                                    rr.unsplit.front().first.to_string("z"));
    }
    for (const auto& r : rr.roots) {
      auto p = normalize_projective({r.value, Scalar(1)});
      out.push_back({{p[0], p[1]}, r.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return vec_less({a.first[0], a.first[1]}, {b.first[0], b.first[1]});
  });
  return out;
}

FiberTable classify_fibers(const ConicMatrix& M, const FieldPolicy& policy) {
  FiberTable t;
  t.discriminant = M.det();
  if (t.discriminant.is_zero()) throw ShapeError("conic matrix is singular along every fiber");
  for (const auto& [zw, mult] : binary_form_roots(t.discriminant, policy)) {
    FiberClass f;
    f.zw = zw;
    f.multiplicity = mult;
    f.rank = M.at(zw[0], zw[1]).rank();
    if (f.rank == 0) throw InternalCheckError("conic matrix vanishes at a fiber");
    if (f.rank == 3) throw InternalCheckError("discriminant root with a smooth fiber");
    f.kind = f.rank == 1 ? FiberKind::DoubleLine : FiberKind::Degenerate;
    t.fibers.push_back(f);
  }
  return t;
}

std::vector<BiPoint> singular_points(const BiForm& F, const FieldPolicy& policy, const FactorCaps& caps) {
  if (!satisfies_euler_relations(F)) throw InternalCheckError("form fails the Euler relations");
  std::vector<Poly> global{F.poly()};
  for (int v = 0; v < 5; ++v) global.push_back(F.poly().derivative(v));
  std::vector<std::future<std::vector<BiPoint>>> jobs;
  for (int p2 = 0; p2 < 3; ++p2) {
    for (int p1 = Z; p1 <= W; ++p1) {
      jobs.push_back(std::async(std::launch::async, [&, p2, p1] {
        std::vector<Poly> eqs;
        for (const auto& g : global) eqs.push_back(chart(g, p2, p1));
        std::vector<BiPoint> pts;
        for (const auto& sol : solve_zero_dimensional(eqs, policy, caps)) {
          std::vector<Scalar> full(5);
          std::size_t k = 0;
          for (int v = 0; v < 5; ++v) full[static_cast<std::size_t>(v)] = (v == p2 || v == p1) ? Scalar(1) : sol[k++];
          pts.emplace_back(std::array<Scalar, 3>{full[0], full[1], full[2]}, std::array<Scalar, 2>{full[3], full[4]});
        }
        return pts;
      }));
    }
  }
  std::vector<BiPoint> out;
  for (auto& j : jobs) {
    for (auto& p : j.get()) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& p : out) {
    auto c = p.coords();
    for (const auto& g : global) {
      if (!g.eval(c).is_zero()) throw InternalCheckError("reported singular point " + p.to_string() + " is not singular");
    }
  }
  return out;
}

long geometric_genus(int a, int b) {
  if (a < 0 || b < 0) throw ShapeError("bidegree must be non-negative");
  return static_cast<long>(a - 1) * (a - 2) * (b - 1) / 2;
}

long intersection_number(Bidegree c1, Bidegree c2) {
  return static_cast<long>(c1.a) * c2.b + static_cast<long>(c2.a) * c1.b;
}

nlohmann::json to_json(const BiPoint& p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : p.coords()) j.push_back(s.to_string());
  return j;
}

nlohmann::json to_json(const FiberTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : t.fibers) {
    arr.push_back({{"zw", {f.zw[0].to_string(), f.zw[1].to_string()}},
                   {"rank", f.rank},
                   {"kind", to_string(f.kind)},
                   {"multiplicity", f.multiplicity}});
  }
  return arr;
}

std::string fiber_table_text(const FiberTable& t) {
  std::vector<std::array<std::string, 4>> rows{{"[z,w]", "rank", "kind", "mult"}};
  for (const auto& f : t.fibers) {
    rows.push_back({"[" + f.zw[0].to_string() + "," + f.zw[1].to_string() + "]", std::to_string(f.rank),
                    to_string(f.kind), std::to_string(f.multiplicity)});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 3; ++i) os << std::left << std::setw(static_cast<int>(width[i])) << r[i] << "  ";
    os << r[3] << "\n";
  }
  return os.str();
}

}  // namespace charvar
