#include "charvar/poly/factor.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "charvar/errors.hpp"
#include "charvar/poly/gcd.hpp"
#include "charvar/poly/zfactor.hpp"

namespace charvar {

bool FieldPolicy::allows(std::int64_t d) const {
  if (d == 0 || radicands.empty()) return true;
  return std::find(radicands.begin(), radicands.end(), d) != radicands.end();
}

bool factor_less(const Poly& a, const Poly& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_string() < b.to_string();
}

namespace {

// ---------------------------------------------------------------- univariate helpers

ZPoly to_zpoly(const UPoly& p) {
  BigInt den = 1;
  for (const auto& c : p.coeffs()) {
    const Rational& q = c.as_rational();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.raw().get_den_mpz_t());
  }
  ZPoly z;
  for (const auto& c : p.coeffs()) {
    Rational v = c.as_rational() * Rational(den);
    z.push_back(v.numerator());
  }
  return z;
}

UPoly from_zpoly(const ZPoly& z) {
  std::vector<Scalar> c;
  for (const auto& x : z) c.emplace_back(Rational(x));
  return UPoly(std::move(c)).monic();
}

bool is_rational(const UPoly& p) { return p.field().is_rational(); }

UPoly conjugate(const UPoly& p) {
  std::vector<Scalar> c;
  for (const auto& x : p.coeffs()) c.push_back(x.conjugate());
  return UPoly(std::move(c));
}

// p(t + s)
UPoly taylor_shift(const UPoly& p, const Scalar& s) {
  UPoly lin({s, Scalar(1)});
  UPoly acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * lin + UPoly::constant(p[i]);
  return acc;
}

std::vector<UPoly> factor_rational_squarefree(const UPoly& f) {
  if (f.degree() <= 1) return {f.monic()};
  std::vector<UPoly> out;
  for (const auto& z : factor_squarefree_zpoly(to_zpoly(f))) out.push_back(from_zpoly(z));
  return out;
}

// Trager's norm method for a square-free polynomial over ℚ(√d).
std::vector<UPoly> factor_surd_squarefree(const UPoly& f_in) {
  UPoly f = f_in.monic();
  if (f.degree() <= 1) return {f};
  std::int64_t d = f.field().radicand;
  for (int c = 0; c < 64; ++c) {
    Scalar shift = c == 0 ? Scalar(0) : Scalar::surd(Rational(0), Rational(c), d);
    UPoly fc = c == 0 ? f : taylor_shift(f, shift);
    UPoly norm = fc * conjugate(fc);
    if (!is_rational(norm)) throw InternalCheckError("norm polynomial is not rational");
    if (gcd(norm, norm.derivative()).degree() > 0) continue;
    std::vector<UPoly> out;
    for (const auto& n : factor_rational_squarefree(norm)) {
      UPoly g = gcd(fc, n);
      if (g.degree() < 1) continue;
      out.push_back(c == 0 ? g : taylor_shift(g, -shift).monic());
    }
    return out;
  }
  throw InternalCheckError("no square-free norm found for " + f.to_string());
}

bool uless(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.to_string() < b.to_string();
}

// Tries to split a monic quadratic; returns roots and the field they need.
std::optional<std::pair<Scalar, Scalar>> split_quadratic(const UPoly& q, const FieldPolicy& policy, Field& active) {
  const Scalar& b = q[1];
  const Scalar& c = q[0];
  Scalar disc = b * b - Scalar(4) * c;
  auto root = try_sqrt(disc);
  if (!root) return std::nullopt;
  Field need = root->field();
  if (!policy.allows(need)) return std::nullopt;
  try {
    Field joined = field_join(active, need);
    active = joined;
  } catch (const IncompatibleFieldError&) {
    return std::nullopt;
  }
  Scalar half(Rational(1, 2));
  Scalar r1 = (-b - *root) * half;
  Scalar r2 = (-b + *root) * half;
  return std::make_pair(r1, r2);
}

}  // namespace

std::vector<std::pair<UPoly, int>> factor_over_field(const UPoly& p) {
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() < 1) return out;
  bool rational = is_rational(p);
  auto sqf = squarefree_decomposition(p);
  for (std::size_t i = 0; i < sqf.size(); ++i) {
    if (sqf[i].degree() < 1) continue;
    auto parts = rational ? factor_rational_squarefree(sqf[i]) : factor_surd_squarefree(sqf[i]);
    for (auto& f : parts) out.emplace_back(std::move(f), static_cast<int>(i + 1));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return uless(x.first, y.first); });
  return out;
}

RootResult univariate_roots(const UPoly& p, const FieldPolicy& policy) {
  RootResult res;
  if (p.is_zero()) throw ShapeError("roots of the zero polynomial");
  Field active = p.field();
  for (const auto& [f, k] : factor_over_field(p)) {
    if (f.degree() == 1) {
      res.roots.push_back({-f[0], k});
      continue;
    }
    if (f.degree() == 2) {
      if (auto r = split_quadratic(f, policy, active)) {
        res.roots.push_back({r->first, k});
        res.roots.push_back({r->second, k});
        continue;
      }
    }
    res.unsplit.emplace_back(f, k);
  }
  std::sort(res.roots.begin(), res.roots.end(),
            [](const URoot& a, const URoot& b) { return canonical_less(a.value, b.value); });
  return res;
}

Poly UnivariateFactorization::product(const VarSet& vars) const {
  Poly p = Poly::constant(vars, unit);
  for (const auto& f : factors) p *= embed(f.factor, vars).pow(f.multiplicity);
  return p;
}

UnivariateFactorization univariate_factor(const Poly& p, const FieldPolicy& policy, const FactorCaps& caps) {
  if (p.is_zero()) throw ShapeError("factorization of the zero polynomial");
  if (!p.is_polynomial()) throw ShapeError("univariate_factor needs a polynomial");
  int var = -1;
  for (int v = 0; v < p.nvars(); ++v) {
    if (!p.involves(v)) continue;
    if (var >= 0) throw ShapeError("univariate_factor: more than one variable in " + p.to_string());
    var = v;
  }
  UnivariateFactorization out;
  out.field = p.field();
  if (var < 0) {
    out.unit = p.constant_term();
    return out;
  }
  if (p.degree(var) > caps.univariate_degree) {
    throw CapExceededError("univariate degree " + std::to_string(p.degree(var)) + " exceeds cap " +
                           std::to_string(caps.univariate_degree));
  }
  UPoly u = UPoly::from_poly(p, var);
  Field active = out.field;
  std::vector<UFactor> factors;
  for (const auto& [f, k] : factor_over_field(u)) {
    if (f.degree() == 2) {
      if (auto r = split_quadratic(f, policy, active)) {
        factors.push_back({normalize(UPoly::monic_linear(r->first).to_poly(p.vars(), var)), k});
        factors.push_back({normalize(UPoly::monic_linear(r->second).to_poly(p.vars(), var)), k});
        continue;
      }
    }
    Poly fp = normalize(f.to_poly(p.vars(), var));
    if (f.degree() >= 3) {
      throw UnsplittableFactorError("irreducible factor of degree " + std::to_string(f.degree()), fp.to_string());
    }
    factors.push_back({fp, k});
  }
  std::sort(factors.begin(), factors.end(), [](const UFactor& a, const UFactor& b) {
    if (a.factor.total_degree() != b.factor.total_degree()) return a.factor.total_degree() < b.factor.total_degree();
    if (a.factor.total_degree() == 1) {
      // order linear factors by their root
      Scalar ra = -a.factor.constant_term() / a.factor.leading().coeff;
      Scalar rb = -b.factor.constant_term() / b.factor.leading().coeff;
      return canonical_less(ra, rb);
    }
    return a.factor.to_string() < b.factor.to_string();
  });
  out.factors = std::move(factors);
  out.field = active;
  Poly prod = Poly::constant(p.vars(), Scalar(1));
  for (const auto& f : out.factors) prod *= f.factor.pow(f.multiplicity);
  out.unit = p.leading().coeff / prod.leading().coeff;
  if (!(prod * out.unit == p)) throw InternalCheckError("univariate factorization does not reproduce input");
  return out;
}

// ---------------------------------------------------------------- multivariate

Poly MultivariateFactorization::product() const {
  if (factors.empty()) throw ShapeError("empty factorization has no variable set");
  Poly p = Poly::constant(factors.front().factor.vars(), unit);
  for (const auto& f : factors) p *= f.factor.pow(f.multiplicity);
  return p;
}

namespace {

struct MonoLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

int ydeg(const Monomial& m, const std::vector<int>& ys) {
  int d = 0;
  for (int y : ys) d += m.e[y];
  return d;
}

int ydeg(const Poly& p, const std::vector<int>& ys) {
  int d = 0;
  for (const auto& t : p.terms()) d = std::max(d, ydeg(t.mono, ys));
  return d;
}

Poly mul_trunc(const Poly& a, const Poly& b, const std::vector<int>& ys, int maxdeg) {
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& ta : a.terms()) {
    int da = ydeg(ta.mono, ys);
    if (da > maxdeg) continue;
    for (const auto& tb : b.terms()) {
      if (da + ydeg(tb.mono, ys) > maxdeg) continue;
      Monomial m = ta.mono * tb.mono;
      auto [it, ins] = acc.try_emplace(m, ta.coeff);
      if (ins) {
        it->second *= tb.coeff;
      } else {
        it->second += ta.coeff * tb.coeff;
      }
    }
  }
  std::vector<Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
  return Poly::from_terms(a.vars(), std::move(terms));
}

Poly homogeneous_part(const Poly& p, const std::vector<int>& ys, int d) {
  std::vector<Poly::Term> terms;
  for (const auto& t : p.terms()) {
    if (ydeg(t.mono, ys) == d) terms.push_back(t);
  }
  return Poly::from_terms(p.vars(), std::move(terms));
}

Poly shift_vars(const Poly& p, const std::vector<int>& ys, const std::vector<Scalar>& a, int sign) {
  bool trivial = true;
  for (const auto& s : a) trivial = trivial && s.is_zero();
  if (trivial) return p;
  std::vector<Poly> images;
  for (int v = 0; v < p.nvars(); ++v) images.push_back(Poly::variable(p.vars(), v));
  for (std::size_t i = 0; i < ys.size(); ++i) {
    images[static_cast<std::size_t>(ys[i])] += Poly::constant(p.vars(), a[i] * Scalar(sign));
  }
  return compose(p, p.vars(), images);
}

// Hensel lifting with the leading coefficient imposed on every factor.
// B is primitive in x, square-free; us are coprime univariate factors of
// B(x, 0) (any scaling). Returns factors of B (primitive in x) or nothing.
std::optional<std::vector<Poly>> hensel_lift(const Poly& B, int x, const std::vector<int>& ys, std::vector<UPoly> us) {
  const VarSet& vs = B.vars();
  int n = B.degree(x);
  Poly L = B.coefficient(x, n);
  Poly L0poly = L;
  for (int y : ys) L0poly = L0poly.partial_eval(y, Scalar(0));
  Scalar L0 = L0poly.constant_term();
  std::size_t r = us.size();
  Poly A = B * L.pow(static_cast<int>(r) - 1);
  std::vector<Poly> U;
  for (auto& u : us) {
    u = u * (L0 / u.lead());
    Poly lift = u.to_poly(vs, x);
    Monomial xm;
    xm.e[x] = static_cast<std::int16_t>(u.degree());
    lift += (L - Poly::constant(vs, L0)).mul_monomial(xm);
    U.push_back(std::move(lift));
  }
  // Partial-fraction cofactors s_i with Σ s_i Π_{j≠i} u_j = 1.
  std::vector<UPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    UPoly b = UPoly::constant(Scalar(1));
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) b = b * us[j];
    }
    s[i] = inverse_mod(b, us[i]);
  }
  int D = ydeg(A, ys);
  for (int m = 1; m <= D; ++m) {
    Poly prod = U[0];
    for (std::size_t i = 1; i < r; ++i) prod = mul_trunc(prod, U[i], ys, m);
    Poly err = homogeneous_part(A, ys, m) - homogeneous_part(prod, ys, m);
    if (err.is_zero()) continue;
    std::map<Monomial, std::vector<Scalar>, MonoLess> groups;
    for (const auto& t : err.terms()) {
      Monomial key = t.mono;
      int e = key.e[x];
      key.e[x] = 0;
      auto& vec = groups[key];
      if (static_cast<int>(vec.size()) <= e) vec.resize(static_cast<std::size_t>(e + 1));
      vec[static_cast<std::size_t>(e)] = t.coeff;
    }
    for (auto& [ymono, coeffs] : groups) {
      UPoly c(coeffs);
      if (c.degree() >= n) return std::nullopt;
      for (std::size_t i = 0; i < r; ++i) {
        UPoly sigma = divmod(c * s[i], us[i]).second;
        if (sigma.is_zero()) continue;
        U[i] += sigma.to_poly(vs, x).mul_monomial(ymono);
      }
    }
  }
  Poly prod = U[0];
  for (std::size_t i = 1; i < r; ++i) prod *= U[i];
  if (!(prod == A)) return std::nullopt;
  std::vector<Poly> out;
  for (auto& u : U) out.push_back(primitive_part_in(u, x));
  return out;
}

std::vector<std::vector<int>> candidate_points(std::size_t k) {
  std::vector<std::vector<int>> out;
  out.emplace_back(k, 0);
  for (int radius = 1; radius <= 3 && out.size() < 80; ++radius) {
    std::vector<int> cur(k, -radius);
    for (;;) {
      int mx = 0;
      for (int c : cur) mx = std::max(mx, std::abs(c));
      if (mx == radius) out.push_back(cur);
      std::size_t i = 0;
      while (i < k && cur[i] == radius) cur[i++] = -radius;
      if (i == k) break;
      ++cur[i];
    }
  }
  return out;
}

std::vector<Poly> factor_primitive_squarefree(const Poly& A, int x, const std::vector<int>& ys) {
  int n = A.degree(x);
  Poly L = A.coefficient(x, n);
  // Evaluate at a few good points; keep the one with the fewest factors.
  std::vector<Scalar> best_point;
  std::vector<UPoly> best_factors;
  int valid = 0;
  for (const auto& pt : candidate_points(ys.size())) {
    std::vector<Scalar> a;
    for (int c : pt) a.emplace_back(c);
    Poly Lv = L;
    Poly Av = A;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      Lv = Lv.partial_eval(ys[i], a[i]);
      Av = Av.partial_eval(ys[i], a[i]);
    }
    if (Lv.is_zero()) continue;
    UPoly u = UPoly::from_poly(Av, x);
    if (u.degree() != n || gcd(u, u.derivative()).degree() > 0) continue;
    auto facs = factor_rational_squarefree(u);
    ++valid;
    if (best_factors.empty() || facs.size() < best_factors.size()) {
      best_factors = facs;
      best_point = a;
    }
    if (best_factors.size() == 1 || valid >= 4) break;
  }
  if (valid == 0) throw CapExceededError("no admissible evaluation point for factoring " + A.to_string());
  if (best_factors.size() == 1) return {A};

  Poly B = shift_vars(A, ys, best_point, +1);
  std::vector<Poly> out;
  if (auto lifted = hensel_lift(B, x, ys, best_factors)) {
    for (auto& f : *lifted) out.push_back(shift_vars(f, ys, best_point, -1));
    return out;
  }
  // Spurious univariate splitting: lift groups two at a time.
  std::vector<UPoly> pool = best_factors;
  Poly target = B;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    bool found = false;
    std::vector<int> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<int>(i);
    for (;;) {
      UPoly g = UPoly::constant(Scalar(1));
      UPoly h = UPoly::constant(Scalar(1));
      for (std::size_t i = 0; i < pool.size(); ++i) {
        bool in = std::find(idx.begin(), idx.end(), static_cast<int>(i)) != idx.end();
        (in ? g : h) = (in ? g : h) * pool[i];
      }
      if (auto lifted = hensel_lift(target, x, ys, {g, h})) {
        out.push_back(shift_vars((*lifted)[0], ys, best_point, -1));
        target = (*lifted)[1];
        std::vector<UPoly> rest;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end()) rest.push_back(pool[i]);
        }
        pool = std::move(rest);
        found = true;
        break;
      }
      // next subset
      int k = static_cast<int>(size);
      int npool = static_cast<int>(pool.size());
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == npool - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (!found) ++size;
  }
  out.push_back(shift_vars(target, ys, best_point, -1));
  return out;
}

void factor_squarefree_rec(const Poly& q, const FactorCaps& caps, std::vector<Poly>& out) {
  if (q.is_constant()) return;
  const VarSet& vs = q.vars();
  Monomial mc = monomial_content(q);
  if (!mc.is_one()) {
    for (int v = 0; v < vs.size(); ++v) {
      for (int k = 0; k < mc.e[v]; ++k) out.push_back(Poly::variable(vs, v));
    }
    factor_squarefree_rec(q.mul_monomial(Monomial{} / mc), caps, out);
    return;
  }
  std::vector<int> involved;
  for (int v = 0; v < vs.size(); ++v) {
    if (q.involves(v)) involved.push_back(v);
  }
  if (involved.size() == 1) {
    int v = involved[0];
    if (q.degree(v) > caps.univariate_degree) {
      throw CapExceededError("univariate degree " + std::to_string(q.degree(v)) + " exceeds cap");
    }
    for (const auto& f : factor_rational_squarefree(UPoly::from_poly(q, v))) out.push_back(f.to_poly(vs, v));
    return;
  }
  // Main variable: constant leading coefficient preferred, then low degree.
  int x = -1;
  bool best_const = false;
  int best_deg = 0;
  for (int v : involved) {
    bool c = q.coefficient(v, q.degree(v)).is_constant();
    int d = q.degree(v);
    if (x < 0 || (c && !best_const) || (c == best_const && d < best_deg)) {
      x = v;
      best_const = c;
      best_deg = d;
    }
  }
  Poly cont = content_in(q, x);
  if (!cont.is_constant()) {
    factor_squarefree_rec(cont, caps, out);
    factor_squarefree_rec(divide_exact(q, cont), caps, out);
    return;
  }
  if (q.degree(x) > caps.univariate_degree) {
    throw CapExceededError("degree " + std::to_string(q.degree(x)) + " in the main variable exceeds cap");
  }
  std::vector<int> ys;
  for (int v : involved) {
    if (v != x) ys.push_back(v);
  }
  if (q.degree(x) == 1) {
    out.push_back(q);
    return;
  }
  for (auto& f : factor_primitive_squarefree(q, x, ys)) out.push_back(std::move(f));
}

}  // namespace

MultivariateFactorization factor_multivariate(const Poly& p, const FactorCaps& caps) {
  if (p.is_zero()) throw ShapeError("factorization of the zero polynomial");
  if (!p.is_polynomial()) throw ShapeError("factor_multivariate needs a polynomial");
  if (!p.is_rational()) throw ShapeError("factor_multivariate works over the rationals");
  MultivariateFactorization res;
  std::vector<MFactor> factors;
  for (const auto& [sq, k] : squarefree_factors(p)) {
    std::vector<Poly> parts;
    factor_squarefree_rec(sq, caps, parts);
    for (auto& f : parts) {
      Poly nf = normalize(f);
      auto it = std::find_if(factors.begin(), factors.end(), [&](const MFactor& m) { return m.factor == nf; });
      if (it != factors.end()) {
        it->multiplicity += k;
      } else {
        factors.push_back({nf, k});
      }
    }
  }
  std::sort(factors.begin(), factors.end(), [](const MFactor& a, const MFactor& b) { return factor_less(a.factor, b.factor); });
  Poly prod = Poly::constant(p.vars(), Scalar(1));
  for (const auto& f : factors) prod *= f.factor.pow(f.multiplicity);
  res.unit = p.leading().coeff / prod.leading().coeff;
  if (!(prod * res.unit == p)) throw InternalCheckError("multivariate factorization does not reproduce input");
  res.factors = std::move(factors);
  return res;
}

}  // namespace charvar
