#include "charvar/poly/gcd.hpp"

#include <algorithm>

#include "charvar/errors.hpp"
#include "charvar/poly/upoly.hpp"

namespace charvar {

namespace {

Poly one(const VarSet& vs) { return Poly::constant(vs, Scalar(1)); }

// Scale by the inverse rational content so coefficient growth stays bounded.
Poly make_primitive_q(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (c.is_one()) return p;
  return p * Scalar(c.inverse());
}

Monomial monomial_min(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(a.e[i], b.e[i]);
  return m;
}

Poly gcd_rec(Poly a, Poly b);

// Upper bound on deg_var gcd(a, b) from a univariate image. Returns -1 when
// no point with non-vanishing leading coefficients was found.
int image_gcd_degree(const Poly& a, const Poly& b, int var) {
  static constexpr int kPoints[][kMaxVars] = {{3, -5, 7, 11, -2, 13}, {-7, 2, 5, -3, 17, 4}, {19, 23, -11, 6, 9, -29}};
  int da = a.degree(var);
  int db = b.degree(var);
  for (const auto& pt : kPoints) {
    Poly av = a;
    Poly bv = b;
    for (int v = 0; v < a.nvars(); ++v) {
      if (v == var) continue;
      Scalar c(pt[v]);
      if (av.involves(v)) av = av.partial_eval(v, c);
      if (bv.involves(v)) bv = bv.partial_eval(v, c);
    }
    UPoly ua = UPoly::from_poly(av, var);
    UPoly ub = UPoly::from_poly(bv, var);
    if (ua.degree() != da || ub.degree() != db) continue;
    return gcd(ua, ub).degree();
  }
  return -1;
}

Poly content_rec(const Poly& p, int var) {
  auto coeffs = p.coefficients(var);
  std::vector<const Poly*> nz;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) nz.push_back(&c);
  }
  if (nz.empty()) return p;
  std::sort(nz.begin(), nz.end(), [](const Poly* x, const Poly* y) { return x->size() < y->size(); });
  Poly g = *nz.front();
  for (std::size_t i = 1; i < nz.size(); ++i) {
    if (g.is_constant()) break;
    g = gcd_rec(g, *nz[i]);
  }
  if (g.is_constant()) return one(p.vars());
  return make_primitive_q(g);
}

Poly gcd_rec(Poly a, Poly b) {
  const VarSet& vs = a.vars();
  if (a.is_zero()) return make_primitive_q(b);
  if (b.is_zero()) return make_primitive_q(a);
  if (a.is_constant() || b.is_constant()) return one(vs);

  Monomial ma = monomial_content(a);
  Monomial mb = monomial_content(b);
  Monomial mg = monomial_min(ma, mb);
  a = a.mul_monomial(Monomial{} / ma);
  b = b.mul_monomial(Monomial{} / mb);

  // A variable present in only one argument cannot occur in the gcd.
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < vs.size(); ++v) {
      bool ia = a.involves(v);
      bool ib = b.involves(v);
      if (ia && !ib) {
        a = content_rec(a, v);
        changed = true;
      } else if (ib && !ia) {
        b = content_rec(b, v);
        changed = true;
      }
      if (a.is_constant() || b.is_constant()) return one(vs).mul_monomial(mg);
    }
  }

  // A variable whose image gcd is constant does not occur in the gcd, so
  // only the contents with respect to it matter.
  for (int v = 0; v < vs.size(); ++v) {
    if (a.involves(v) && image_gcd_degree(a, b, v) == 0) {
      return make_primitive_q(gcd_rec(content_rec(a, v), content_rec(b, v))).mul_monomial(mg);
    }
  }

  int var = -1;
  int best = 0;
  for (int v = 0; v < vs.size(); ++v) {
    if (!a.involves(v)) continue;
    int d = std::max(a.degree(v), b.degree(v));
    if (var < 0 || d < best) {
      var = v;
      best = d;
    }
  }
  if (var < 0) return one(vs).mul_monomial(mg);

  Poly ca = content_rec(a, var);
  Poly cb = content_rec(b, var);
  Poly c = gcd_rec(ca, cb);
  Poly pa = make_primitive_q(divide_exact(a, ca));
  Poly pb = make_primitive_q(divide_exact(b, cb));

  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  Poly g(vs);
  if (try_divide(pa, pb)) {
    g = pb;
  } else if (pb.degree(var) == 0) {
    g = one(vs);
  } else {
    Poly A = pa;
    Poly B = pb;
    for (;;) {
      Poly R = pseudo_remainder(A, B, var);
      if (R.is_zero()) {
        g = B;
        break;
      }
      if (R.degree(var) == 0) {
        g = one(vs);
        break;
      }
      A = std::move(B);
      B = make_primitive_q(primitive_part_in(R, var));
      if (B.degree(var) > 0 && try_divide(A, B)) {
        g = B;
        break;
      }
    }
    g = primitive_part_in(g, var);
  }
  return make_primitive_q(c * g).mul_monomial(mg);
}

}  // namespace

Poly content_in(const Poly& p, int var) {
  if (p.is_zero()) return p;
  return normalize(content_rec(p, var));
}

Poly primitive_part_in(const Poly& p, int var) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_rec(p, var));
}

Poly gcd_multivariate(const Poly& a, const Poly& b) {
  if (!(a.vars() == b.vars())) throw ShapeError("gcd: variable sets differ");
  if (a.is_zero() && b.is_zero()) return a;
  Poly ca = a.is_polynomial() ? a : clear_denominators(a).first;
  Poly cb = b.is_polynomial() ? b : clear_denominators(b).first;
  return normalize(gcd_rec(ca, cb));
}

Poly resultant(const Poly& a_in, const Poly& b_in, int var) {
  const VarSet& vs = a_in.vars();
  if (a_in.is_zero() || b_in.is_zero()) return Poly(vs);
  Poly A = a_in;
  Poly B = b_in;
  int s = 1;
  if (A.degree(var) < B.degree(var)) {
    std::swap(A, B);
    if ((A.degree(var) % 2 == 1) && (B.degree(var) % 2 == 1)) s = -s;
  }
  if (B.degree(var) == 0) return B.pow(A.degree(var));
  Poly g = one(vs);
  Poly h = one(vs);
  for (;;) {
    int da = A.degree(var);
    int db = B.degree(var);
    int delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) s = -s;
    Poly R = pseudo_remainder(A, B, var);
    A = std::move(B);
    B = divide_exact(R, g * h.pow(delta));
    g = A.coefficient(var, A.degree(var));
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      h = divide_exact(g.pow(delta), h.pow(delta - 1));
    }
    if (B.is_zero()) return Poly(vs);
    if (B.degree(var) == 0) break;
  }
  int da = A.degree(var);
  Poly lb = B;  // constant in var
  Poly res = da == 1 ? lb : divide_exact(lb.pow(da), h.pow(da - 1));
  return s < 0 ? -res : res;
}

namespace {

void squarefree_rec(const Poly& p, std::vector<std::pair<Poly, int>>& out) {
  if (p.is_constant()) return;
  int var = -1;
  for (int v = 0; v < p.nvars(); ++v) {
    if (p.involves(v)) {
      var = v;
      break;
    }
  }
  Poly c = content_rec(p, var);
  squarefree_rec(c, out);
  Poly f = divide_exact(p, c);
  // Yun's algorithm in `var`.
  Poly d = f.derivative(var);
  Poly g = gcd_rec(f, d);
  Poly b = divide_exact(f, g);
  Poly cc = divide_exact(d, g);
  Poly e = cc - b.derivative(var);
  int i = 1;
  while (b.degree(var) > 0) {
    Poly h = gcd_rec(b, e);
    if (!h.is_constant()) out.emplace_back(normalize(h), i);
    b = divide_exact(b, h);
    cc = divide_exact(e, h);
    e = cc - b.derivative(var);
    ++i;
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p) {
  if (!p.is_polynomial()) throw ShapeError("square-free decomposition needs a polynomial");
  std::vector<std::pair<Poly, int>> raw;
  squarefree_rec(p, raw);
  // Merge entries of equal multiplicity coming from different content levels.
  std::vector<std::pair<Poly, int>> out;
  for (auto& [f, k] : raw) {
    auto it = std::find_if(out.begin(), out.end(), [k = k](const auto& e) { return e.second == k; });
    if (it == out.end()) {
      out.emplace_back(f, k);
    } else {
      it->first = normalize(it->first * f);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

Poly squarefree_part(const Poly& p) {
  Poly r = Poly::constant(p.vars(), Scalar(1));
  for (const auto& [f, k] : squarefree_factors(p)) r *= f;
  return normalize(r);
}

}  // namespace charvar
