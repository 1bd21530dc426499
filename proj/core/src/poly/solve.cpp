#include "charvar/poly/solve.hpp"

#include <algorithm>
#include <optional>

#include "charvar/errors.hpp"
#include "charvar/poly/factor.hpp"
#include "charvar/poly/gcd.hpp"
#include "charvar/poly/upoly.hpp"

namespace charvar {

namespace {

using Points = std::vector<std::vector<Scalar>>;

struct Context {
  const FieldPolicy& policy;
  const FactorCaps& caps;
};

Poly tidy(const Poly& p) { return p.is_constant() ? p : normalize(squarefree_part(p)); }

// Drops zeros and duplicates. Returns nullopt when a nonzero constant shows
// the system is inconsistent.
std::optional<std::vector<Poly>> clean(const std::vector<Poly>& in) {
  std::vector<Poly> out;
  for (const auto& p : in) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return std::nullopt;
    Poly q = tidy(p);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  return out;
}

// If two equations share a factor g, V(f, g·h, R) = V(g, R) ∪ V(h, f, R)
// where g divides f. Returns the two branches.
std::optional<std::pair<std::vector<Poly>, std::vector<Poly>>> split_common_factor(const std::vector<Poly>& eqs) {
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = i + 1; j < eqs.size(); ++j) {
      Poly g = gcd_multivariate(eqs[i], eqs[j]);
      if (g.is_constant()) continue;
      std::vector<Poly> with_g;
      std::vector<Poly> without_g;
      for (std::size_t k = 0; k < eqs.size(); ++k) {
        if (k == i || k == j) continue;
        with_g.push_back(eqs[k]);
        without_g.push_back(eqs[k]);
      }
      with_g.push_back(g);
      without_g.push_back(eqs[i]);
      without_g.push_back(divide_exact(eqs[j], g));
      return std::make_pair(std::move(with_g), std::move(without_g));
    }
  }
  return std::nullopt;
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  return divmod(a * b, gcd(a, b)).first.monic();
}

// Returns a univariate polynomial in `keep` vanishing at the `keep`-coordinate
// of every common zero. Zero means the elimination lost all information;
// a nonzero constant means there are no common zeros.
UPoly eliminate(const std::vector<Poly>& eqs_in, const std::vector<int>& order, int keep, int depth = 0) {
  auto eqs = clean(eqs_in);
  if (!eqs) return UPoly::constant(Scalar(1));
  if (eqs->empty()) return UPoly();
  if (depth < 12) {
    if (auto br = split_common_factor(*eqs)) {
      UPoly a = eliminate(br->first, order, keep, depth + 1);
      if (a.is_zero()) return a;
      return lcm(a, eliminate(br->second, order, keep, depth + 1));
    }
  }
  if (order.empty()) {
    UPoly g;
    for (const auto& p : *eqs) {
      g = gcd(g, UPoly::from_poly(p, keep));
      if (g.degree() == 0) break;
    }
    return g;
  }
  int v = order.front();
  std::vector<int> rest(order.begin() + 1, order.end());
  std::vector<Poly> with;
  std::vector<Poly> next;
  for (auto& p : *eqs) (p.involves(v) ? with : next).push_back(std::move(p));
  if (!with.empty()) {
    auto pivot = std::min_element(with.begin(), with.end(), [v](const Poly& a, const Poly& b) {
      if (a.degree(v) != b.degree(v)) return a.degree(v) < b.degree(v);
      if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
      return a.size() < b.size();
    });
    for (auto it = with.begin(); it != with.end(); ++it) {
      if (it != pivot) next.push_back(resultant(*pivot, *it, v));
    }
  }
  return eliminate(next, rest, keep, depth);
}

Points solve_rec(const std::vector<Poly>& eqs_in, const std::vector<int>& active, std::vector<Scalar>& point,
                 const Context& ctx);

// Decides whether the roots of the irreducible factor q(t) carry any common
// zero. Eliminating t against q keeps the coefficients rational; every
// common zero with q(t) = 0 projects into the resulting system.
bool factor_has_solutions(const std::vector<Poly>& eqs, const std::vector<int>& active, int t, const UPoly& q,
                          const Context& ctx) {
  const VarSet& vs = eqs.front().vars();
  Poly qp = q.to_poly(vs, t);
  std::vector<Poly> reduced;
  for (const auto& f : eqs) reduced.push_back(f.involves(t) ? resultant(qp, f, t) : f);
  std::vector<int> others;
  for (int v : active) {
    if (v != t) others.push_back(v);
  }
  std::vector<Scalar> pt(static_cast<std::size_t>(vs.size()));
  Points sols;
  try {
    sols = solve_rec(reduced, others, pt, ctx);
  } catch (const Error&) {
    return true;
  }
  for (const auto& s : sols) {
    UPoly g = q;
    for (const auto& f : eqs) {
      Poly e = f;
      for (int v : others) e = e.partial_eval(v, s[static_cast<std::size_t>(v)]);
      g = gcd(g, UPoly::from_poly(e, t));
      if (g.degree() == 0) break;
    }
    if (g.degree() > 0) return true;
  }
  return false;
}

struct Eliminant {
  UPoly poly;
  std::vector<URoot> roots;
  std::optional<UPoly> unsplit;
};

Eliminant eliminant_for(const std::vector<Poly>& eqs, const std::vector<int>& active, int t, const Context& ctx) {
  std::vector<int> others;
  for (int v : active) {
    if (v != t) others.push_back(v);
  }
  Eliminant e;
  int tries = 0;
  do {
    UPoly r = eliminate(eqs, others, t);
    if (r.is_zero()) continue;
    e.poly = e.poly.is_zero() ? r : gcd(e.poly, r);
    if (e.poly.degree() <= 0) return e;
    if (e.poly.degree() > ctx.caps.univariate_degree) continue;
    if (univariate_roots(e.poly, ctx.policy).unsplit.empty()) break;
  } while (++tries < 6 && std::next_permutation(others.begin(), others.end()));
  if (e.poly.is_zero()) return e;
  if (e.poly.degree() > ctx.caps.univariate_degree) {
    throw CapExceededError("eliminant of degree " + std::to_string(e.poly.degree()) + " exceeds the cap");
  }
  RootResult rr = univariate_roots(e.poly, ctx.policy);
  e.roots = std::move(rr.roots);
  for (const auto& [q, mult] : rr.unsplit) {
    if (factor_has_solutions(eqs, active, t, q, ctx)) {
      e.unsplit = q;
      break;
    }
  }
  return e;
}

Points solve_rec(const std::vector<Poly>& eqs_in, const std::vector<int>& active, std::vector<Scalar>& point,
                 const Context& ctx) {
  Points out;
  auto eqs = clean(eqs_in);
  if (!eqs) return out;
  if (active.empty()) {
    if (!eqs->empty()) throw InternalCheckError("solver: equations left after all variables were fixed");
    out.push_back(point);
    return out;
  }
  if (eqs->empty()) throw PositiveDimensionalError("the solution set has free variables");
  for (std::size_t i = 0; i < eqs->size(); ++i) {
    const Poly& f = (*eqs)[i];
    if (!f.is_rational() || f.total_degree() < 2) continue;
    auto fac = factor_multivariate(f, ctx.caps);
    if (fac.factors.size() < 2) continue;
    for (const auto& mf : fac.factors) {
      std::vector<Poly> branch = *eqs;
      branch[i] = mf.factor;
      for (auto& s : solve_rec(branch, active, point, ctx)) out.push_back(std::move(s));
    }
    return out;
  }
  std::optional<Eliminant> chosen;
  int chosen_var = -1;
  std::optional<UPoly> blocker;
  bool any_nonzero = false;
  for (int t : active) {
    Eliminant e = eliminant_for(*eqs, active, t, ctx);
    if (e.poly.is_zero()) continue;
    any_nonzero = true;
    if (e.poly.degree() == 0) return out;
    if (e.unsplit) {
      if (!blocker || e.unsplit->degree() < blocker->degree()) blocker = e.unsplit;
      continue;
    }
    chosen = std::move(e);
    chosen_var = t;
    break;
  }
  if (!chosen) {
    if (!any_nonzero) throw PositiveDimensionalError("no elimination order yields a nonzero eliminant");
    throw UnsplittableFactorError("solution coordinates need a field outside the policy", blocker->to_string());
  }
  std::vector<int> rest;
  for (int v : active) {
    if (v != chosen_var) rest.push_back(v);
  }
  for (const auto& root : chosen->roots) {
    std::vector<Poly> sub;
    sub.reserve(eqs->size());
    for (const auto& p : *eqs) sub.push_back(p.partial_eval(chosen_var, root.value));
    point[static_cast<std::size_t>(chosen_var)] = root.value;
    for (auto& s : solve_rec(sub, rest, point, ctx)) out.push_back(std::move(s));
  }
  return out;
}

bool point_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return false;
}

}  // namespace

std::vector<std::vector<Scalar>> solve_zero_dimensional(const std::vector<Poly>& eqs, const FieldPolicy& policy,
                                                        const FactorCaps& caps) {
  if (eqs.empty()) throw PositiveDimensionalError("empty system");
  const VarSet& vs = eqs.front().vars();
  for (const auto& p : eqs) {
    if (!(p.vars() == vs)) throw ShapeError("solver: equations use different variable sets");
    if (!p.is_polynomial()) throw ShapeError("solver: Laurent equations are not supported");
  }
  std::vector<int> active;
  for (int v = 0; v < vs.size(); ++v) active.push_back(v);
  std::vector<Scalar> point(static_cast<std::size_t>(vs.size()));
  Context ctx{policy, caps};
  Points out = solve_rec(eqs, active, point, ctx);
  for (const auto& sol : out) {
    for (const auto& p : eqs) {
      if (!p.eval(sol).is_zero()) throw InternalCheckError("solver produced a non-solution");
    }
  }
  std::sort(out.begin(), out.end(), point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace charvar
