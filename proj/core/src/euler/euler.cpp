#include "charvar/euler/euler.hpp"

#include <algorithm>

#include "charvar/errors.hpp"
#include "charvar/poly/solve.hpp"

namespace charvar {

namespace {

constexpr int kX = 0;
constexpr int kY = 1;
constexpr int kU = 2;
constexpr int kZ = 3;
constexpr int kW = 4;

Monomial mono(int x, int y) {
  Monomial m;
  m.e[kX] = static_cast<std::int16_t>(x);
  m.e[kY] = static_cast<std::int16_t>(y);
  return m;
}

std::array<Scalar, 2> normalized_pair(const Scalar& a, const Scalar& b) {
  auto v = normalize_projective({a, b});
  return {v[0], v[1]};
}

bool pair_less(const std::array<Scalar, 2>& a, const std::array<Scalar, 2>& b) {
  for (int i = 0; i < 2; ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return false;
}

// Zeros of A x² + B xy + C y² with nonzero discriminant.
std::vector<P1P1Point> quadratic_points(const Scalar& A, const Scalar& B, const Scalar& C,
                                        const std::array<Scalar, 2>& zw) {
  std::vector<P1P1Point> out;
  if (A.is_zero()) {
    out.emplace_back(std::array<Scalar, 2>{Scalar(1), Scalar(0)}, zw);
    out.emplace_back(std::array<Scalar, 2>{C, -B}, zw);
  } else {
    Scalar disc = B * B - Scalar(4) * A * C;
    std::optional<Scalar> root;
    try {
      root = try_sqrt(disc);
    } catch (const IncompatibleFieldError&) {
      return out;
    }
    if (!root) return out;
    Scalar twice_a = Scalar(2) * A;
    for (const Scalar& sign : {Scalar(-1), Scalar(1)}) {
      Scalar r = (-B + sign * *root) / twice_a;
      out.emplace_back(std::array<Scalar, 2>{r, Scalar(1)}, zw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<P1P1Point> intersect_pair(const Poly& f1, const Poly& f2, const FieldPolicy& policy) {
  std::vector<P1P1Point> pts;
  for (int p : {kX, kY}) {
    for (int q : {kZ, kW}) {
      int fp = p == kX ? kY : kX;
      int fq = q == kZ ? kW : kZ;
      VarSet local{biform_vars().name(fp), biform_vars().name(fq)};
      auto restrict = [&](const Poly& f) { return embed(f.partial_eval(p, Scalar(1)).partial_eval(q, Scalar(1)), local); };
      for (const auto& s : solve_zero_dimensional({restrict(f1), restrict(f2)}, policy)) {
        std::array<Scalar, 2> xy;
        std::array<Scalar, 2> zw;
        xy[static_cast<std::size_t>(p)] = Scalar(1);
        xy[static_cast<std::size_t>(fp)] = s[0];
        zw[static_cast<std::size_t>(q - kZ)] = Scalar(1);
        zw[static_cast<std::size_t>(fq - kZ)] = s[1];
        pts.emplace_back(xy, zw);
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

P1P1Point::P1P1Point(std::array<Scalar, 2> xy, std::array<Scalar, 2> zw)
    : xy_(normalized_pair(xy[0], xy[1])), zw_(normalized_pair(zw[0], zw[1])) {}

std::string P1P1Point::to_string() const {
  return "[" + xy_[0].to_string() + "," + xy_[1].to_string() + ":" + zw_[0].to_string() + "," +
         zw_[1].to_string() + "]";
}

bool operator<(const P1P1Point& a, const P1P1Point& b) {
  if (pair_less(a.zw_, b.zw_)) return true;
  if (pair_less(b.zw_, a.zw_)) return false;
  return pair_less(a.xy_, b.xy_);
}

Scalar eval_at(const Poly& form, const P1P1Point& p) {
  std::vector<Scalar> pt{p.xy()[0], p.xy()[1], Scalar(0), p.zw()[0], p.zw()[1]};
  return form.eval(pt);
}

EvenSplit split_even(const BiForm& F) {
  if (F.bidegree().a != 2) throw ShapeError("even split needs degree 2 in (x,y,u)");
  const Poly& f = F.poly();
  if (!f.coefficient(kU, 1).is_zero()) throw ShapeError("even split: F has terms of odd degree in u");
  Poly h = f.coefficient(kU, 2);
  if (h.involves(kX) || h.involves(kY)) throw ShapeError("even split: the u² coefficient involves x or y");
  if (h.is_zero()) throw ShapeError("even split: F has no u² term");
  Poly g = f.coefficient(kU, 0);
  if (g.is_zero()) throw ShapeError("even split: F is divisible by u²");
  EvenSplit s{BiForm(g, F.bidegree()), embed(h, base_vars())};
  if (!(s.g.poly() + h * Poly::variable(biform_vars(), kU).pow(2) == f)) {
    throw InternalCheckError("even split does not reproduce F");
  }
  return s;
}

BranchGeometry branch_geometry(const BiForm& g, const FieldPolicy& policy, const FactorCaps& caps) {
  if (g.poly().is_zero()) throw ShapeError("branch curve is empty");
  if (g.poly().involves(kU)) throw ShapeError("branch curve must be free of u");
  BranchGeometry out;
  for (const auto& bf : factor_biform_interp(g, caps).factors) {
    Bidegree d = bf.factor.bidegree();
    if (d.a == 0 && d.b == 0) continue;
    if (bf.multiplicity > 1) throw ShapeError("branch component " + bf.factor.to_string() + " is not reduced");
    if ((d.a - 1) * (d.b - 1) != 0) {
      throw ShapeError("branch component " + bf.factor.to_string() + " of bidegree " + d.to_string() +
                       " is not rational");
    }
    out.components.push_back({bf.factor.poly(), d});
  }
  std::vector<P1P1Point> pts;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    for (std::size_t j = i + 1; j < out.components.size(); ++j) {
      auto ij = intersect_pair(out.components[i].factor, out.components[j].factor, policy);
      pts.insert(pts.end(), ij.begin(), ij.end());
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  out.chi = 2 * static_cast<long>(out.components.size());
  for (const auto& p : pts) {
    int k = 0;
    for (const auto& c : out.components) {
      if (eval_at(c.factor, p).is_zero()) ++k;
    }
    if (k < 2) throw InternalCheckError("intersection point " + p.to_string() + " lies on fewer than two components");
    out.intersections.push_back({p, k});
    out.chi -= k - 1;
  }
  return out;
}

std::size_t InfiniteFibers::l_size() const {
  std::size_t n = 0;
  for (const auto& r : roots) n += static_cast<std::size_t>(r.count);
  return n;
}

InfiniteFibers infinite_fibers(const EvenSplit& split, const FieldPolicy& policy) {
  InfiniteFibers out;
  const Poly& g = split.g.poly();
  for (const auto& [root, mult] : binary_form_roots(split.h, policy)) {
    if (mult > 1) throw ShapeError("h has a repeated root at [" + root[0].to_string() + "," + root[1].to_string() + "]");
    RootFiber rf;
    rf.root = root;
    rf.quadratic = g.partial_eval(kZ, root[0]).partial_eval(kW, root[1]);
    if (rf.quadratic.is_zero()) throw ShapeError("g vanishes on the whole fiber over a root of h");
    Scalar A = rf.quadratic.coefficient_of(mono(2, 0));
    Scalar B = rf.quadratic.coefficient_of(mono(1, 1));
    Scalar C = rf.quadratic.coefficient_of(mono(0, 2));
    if ((B * B - Scalar(4) * A * C).is_zero()) {
      throw ShapeError("g restricted to the fiber over a root of h has a double root");
    }
    rf.count = 2;
    rf.points = quadratic_points(A, B, C, root);
    for (const auto& p : rf.points) {
      if (!eval_at(g, p).is_zero()) throw InternalCheckError("L-point " + p.to_string() + " is off the branch curve");
    }
    BiPoint fundamental({Scalar(0), Scalar(0), Scalar(1)}, root);
    std::vector<Scalar> h_at{root[0], root[1]};
    if (!split.h.eval(h_at).is_zero()) throw InternalCheckError("fundamental point is off the surface");
    out.fundamental.push_back(fundamental);
    out.chi_q += 2 - rf.count;
    out.roots.push_back(std::move(rf));
  }
  out.chi_l = static_cast<long>(out.l_size());
  out.chi_preimage_l = 2 * out.chi_l - static_cast<long>(out.fundamental.size());
  return out;
}

CoverGeometry cover_geometry(const EvenSplit& split, const FieldPolicy& policy, const FactorCaps& caps) {
  return {branch_geometry(split.g, policy, caps), infinite_fibers(split, policy)};
}

long chi_singular_model(const CoverGeometry& geom) {
  const auto& inf = geom.infinite;
  for (const auto& r : inf.roots) {
    for (const auto& p : r.points) {
      bool on_branch = std::any_of(geom.branch.components.begin(), geom.branch.components.end(),
                                   [&](const BranchComponent& c) { return eval_at(c.factor, p).is_zero(); });
      if (!on_branch) throw InternalCheckError("L-point " + p.to_string() + " is not on a branch component");
    }
  }
  if (inf.chi_preimage_l != 2 * inf.chi_l - static_cast<long>(inf.fundamental.size())) {
    throw InternalCheckError("inconsistent preimage count for L");
  }
  return 8 - inf.chi_q - geom.branch.chi - inf.chi_l + inf.chi_preimage_l;
}

SurfaceClassification classify_surface(long chi_singular, const std::vector<ResolutionRecord>& resolution,
                                       const std::vector<FiberClass>& fibers) {
  SurfaceClassification c;
  c.chi_singular = chi_singular;
  for (const auto& r : resolution) {
    if (!r.smooth) throw ShapeError("resolution at " + r.point.to_string() + " is not smooth");
    c.increments += r.chi_increment;
  }
  c.chi_smooth = chi_singular + c.increments;
  c.singular_fibers = static_cast<int>(std::count_if(fibers.begin(), fibers.end(),
                                                     [](const FiberClass& f) { return f.kind != FiberKind::Smooth; }));
  if (c.singular_fibers > 0) {
    long n = c.chi_smooth - 3;
    if (n < 0) throw InternalCheckError("negative blow-up count from chi " + std::to_string(c.chi_smooth));
    c.blowup_count = n;
    c.verdict = "P2 blown up at " + std::to_string(n) + " points";
  } else if (c.chi_smooth == 4) {
    c.verdict = "indeterminate minimal ruled";
  } else {
    throw InternalCheckError("a conic bundle without singular fibers must have chi 4, got " +
                             std::to_string(c.chi_smooth));
  }
  return c;
}

nlohmann::json to_json(const P1P1Point& p) {
  return {{"xy", {p.xy()[0].to_string(), p.xy()[1].to_string()}},
          {"zw", {p.zw()[0].to_string(), p.zw()[1].to_string()}}};
}

nlohmann::json to_json(const CoverGeometry& g) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : g.branch.components) {
    comps.push_back({{"polynomial", c.factor.to_string()}, {"bidegree", {c.bidegree.a, c.bidegree.b}}});
  }
  nlohmann::json inter = nlohmann::json::array();
  for (const auto& i : g.branch.intersections) inter.push_back({{"point", to_json(i.point)}, {"components", i.components}});
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : g.infinite.roots) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : r.points) pts.push_back(to_json(p));
    roots.push_back({{"root", {r.root[0].to_string(), r.root[1].to_string()}},
                     {"restriction", r.quadratic.to_string()},
                     {"l_points", pts},
                     {"l_count", r.count}});
  }
  nlohmann::json fund = nlohmann::json::array();
  for (const auto& p : g.infinite.fundamental) fund.push_back(to_json(p));
  return {{"branch_components", comps},
          {"branch_intersections", inter},
          {"roots_of_h", roots},
          {"fundamental_points", fund},
          {"chi_B", g.branch.chi},
          {"chi_Q", g.infinite.chi_q},
          {"chi_L", g.infinite.chi_l},
          {"chi_preimage_L", g.infinite.chi_preimage_l}};
}

nlohmann::json to_json(const SurfaceClassification& c) {
  nlohmann::json j{{"chi_singular", c.chi_singular},
                   {"chi_smooth", c.chi_smooth},
                   {"verdict", c.verdict},
                   {"evidence", {{"resolution_increment", c.increments}, {"singular_fibers", c.singular_fibers}}}};
  j["blowup_count"] = c.blowup_count ? nlohmann::json(*c.blowup_count) : nlohmann::json(nullptr);
  return j;
}

}  // namespace charvar
