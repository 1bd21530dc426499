#include "charvar/poly/biform.hpp"

#include <algorithm>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

constexpr int X = 0, Y = 1, U = 2, Z = 3, W = 4;

int p2deg(const Monomial& m) { return m.e[X] + m.e[Y] + m.e[U]; }
int p1deg(const Monomial& m) { return m.e[Z] + m.e[W]; }

}  // namespace

const VarSet& biform_vars() {
  static const VarSet vs{"x", "y", "u", "z", "w"};
  return vs;
}

const VarSet& trace_vars() {
  static const VarSet vs{"x", "y", "z"};
  return vs;
}

BiForm::BiForm(Poly base, Bidegree deg) : base_(std::move(base)), deg_(deg) {
  if (!(base_.vars() == biform_vars())) throw ShapeError("biform needs variables (x,y,u,z,w)");
  if (!base_.is_polynomial()) throw ShapeError("biform must be a polynomial");
  for (const auto& t : base_.terms()) {
    if (p2deg(t.mono) != deg_.a || p1deg(t.mono) != deg_.b) {
      throw ShapeError("term of " + base_.to_string() + " is not of bidegree " + deg_.to_string());
    }
  }
}

BiForm BiForm::from_poly(const Poly& base) {
  if (base.is_zero()) throw ShapeError("the zero polynomial has no bidegree");
  const auto& m = base.leading().mono;
  return BiForm(base, {p2deg(m), p1deg(m)});
}

BiForm BiForm::parse(const std::string& text) { return from_poly(Poly::parse(text, biform_vars())); }

BiForm bihomogenize(const Poly& ftilde) {
  if (ftilde.is_zero()) throw ShapeError("cannot bihomogenize the zero polynomial");
  if (!ftilde.is_polynomial()) throw ShapeError("cannot bihomogenize a Laurent polynomial");
  Poly f = embed(ftilde, trace_vars());
  int a = 0;
  int b = 0;
  for (const auto& t : f.terms()) {
    a = std::max(a, t.mono.e[0] + t.mono.e[1]);
    b = std::max(b, static_cast<int>(t.mono.e[2]));
  }
  std::vector<Poly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    m.e[X] = t.mono.e[0];
    m.e[Y] = t.mono.e[1];
    m.e[U] = static_cast<std::int16_t>(a - t.mono.e[0] - t.mono.e[1]);
    m.e[Z] = t.mono.e[2];
    m.e[W] = static_cast<std::int16_t>(b - t.mono.e[2]);
    terms.push_back({m, t.coeff});
  }
  return BiForm(Poly::from_terms(biform_vars(), std::move(terms)), {a, b});
}

Poly dehomogenize(const BiForm& F) {
  std::vector<Poly::Term> terms;
  terms.reserve(F.poly().size());
  for (const auto& t : F.poly().terms()) {
    Monomial m;
    m.e[0] = t.mono.e[X];
    m.e[1] = t.mono.e[Y];
    m.e[2] = t.mono.e[Z];
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(trace_vars(), std::move(terms));
}

Poly chart(const Poly& F, int p2, int p1) {
  if (p2 < X || p2 > U || p1 < Z || p1 > W) throw ShapeError("invalid chart");
  std::vector<std::string> names;
  std::vector<int> keep;
  for (int v = 0; v < F.nvars(); ++v) {
    if (v == p2 || v == p1) continue;
    names.push_back(F.vars().name(v));
    keep.push_back(v);
  }
  VarSet vs(names);
  std::vector<Poly::Term> terms;
  terms.reserve(F.size());
  for (const auto& t : F.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < keep.size(); ++i) m.e[i] = t.mono.e[keep[i]];
    terms.push_back({m, t.coeff});
  }
  return Poly::from_terms(vs, std::move(terms));
}

bool satisfies_euler_relations(const BiForm& F) {
  const Poly& f = F.poly();
  const VarSet& vs = biform_vars();
  auto v = [&](int i) { return Poly::variable(vs, i); };
  Poly e2 = v(X) * f.derivative(X) + v(Y) * f.derivative(Y) + v(U) * f.derivative(U);
  Poly e1 = v(Z) * f.derivative(Z) + v(W) * f.derivative(W);
  return e2 == f * Scalar(F.bidegree().a) && e1 == f * Scalar(F.bidegree().b);
}

Poly BiFactorization::product() const {
  Poly p = Poly::constant(biform_vars(), unit);
  for (const auto& f : factors) p *= f.factor.poly().pow(f.multiplicity);
  return p;
}

BiFactorization factor_biform_interp(const BiForm& F, const FactorCaps& caps) {
  Bidegree d = F.bidegree();
  if (d.a > caps.biform_a || d.b > caps.biform_b) {
    throw CapExceededError("bidegree " + d.to_string() + " exceeds the factorization cap (" +
                           std::to_string(caps.biform_a) + "," + std::to_string(caps.biform_b) + ")");
  }
  if (F.poly().is_zero()) throw ShapeError("factorization of the zero form");
  BiFactorization res;
  std::vector<BiFactor> out;
  Bidegree covered;
  Poly affine = dehomogenize(F);
  if (!affine.is_constant()) {
    MultivariateFactorization mf = factor_multivariate(affine, caps);
    for (const auto& f : mf.factors) {
      BiForm g = bihomogenize(f.factor);
      covered.a += g.bidegree().a * f.multiplicity;
      covered.b += g.bidegree().b * f.multiplicity;
      out.push_back({std::move(g), f.multiplicity});
    }
  }
  // Whatever bidegree the affine factors do not account for is a power of u or w.
  if (d.a > covered.a) out.push_back({BiForm(Poly::variable(biform_vars(), U), {1, 0}), d.a - covered.a});
  if (d.b > covered.b) out.push_back({BiForm(Poly::variable(biform_vars(), W), {0, 1}), d.b - covered.b});
  std::sort(out.begin(), out.end(),
            [](const BiFactor& x, const BiFactor& y) { return factor_less(x.factor.poly(), y.factor.poly()); });
  Poly prod = Poly::constant(biform_vars(), Scalar(1));
  for (const auto& f : out) prod *= f.factor.poly().pow(f.multiplicity);
  res.unit = F.poly().leading().coeff / prod.leading().coeff;
  if (!(prod * res.unit == F.poly())) throw InternalCheckError("biform factorization does not reproduce its input");
  res.factors = std::move(out);
  return res;
}

}  // namespace charvar
