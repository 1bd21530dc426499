#include "charvar/traceelim/traceelim.hpp"

#include <algorithm>
#include <map>

#include "charvar/errors.hpp"
#include "charvar/exactnum/matrix.hpp"
#include "charvar/linkgroup/linkgroup.hpp"

namespace charvar {

namespace {

const VarSet& msz_vars() {
  static const VarSet vs{"m", "s", "z"};
  return vs;
}

Poly sigma(const Poly& q) {
  std::vector<Poly::Term> terms;
  terms.reserve(q.size());
  for (const auto& t : q.terms()) {
    Poly::Term n = t;
    n.mono.e[0] = static_cast<std::int16_t>(-n.mono.e[0]);
    n.mono.e[1] = static_cast<std::int16_t>(-n.mono.e[1]);
    terms.push_back(std::move(n));
  }
  return Poly::from_terms(q.vars(), std::move(terms));
}

// Binomial coefficients up to row n.
std::vector<std::vector<Scalar>> binomials(int n) {
  std::vector<std::vector<Scalar>> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), Scalar(1));
    for (int k = 1; k < i; ++k) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
    }
  }
  return c;
}

// Coefficient of t^e in (t + 1/t)^i.
Scalar sym_coeff(const std::vector<std::vector<Scalar>>& binom, int i, int e) {
  if (e > i || e < -i || (i - e) % 2 != 0) return Scalar(0);
  return binom[static_cast<std::size_t>(i)][static_cast<std::size_t>((i - e) / 2)];
}

// Writes a Laurent polynomial c(m,s), invariant under m ↦ 1/m and s ↦ 1/s,
// as a polynomial in x = m+1/m, y = s+1/s. Only the quadrant α, β ≥ 0 of
// the coefficient equations is solved; the result is then re-expanded and
// compared with c in full.
Poly block_to_xy(const Poly& c, int k) {
  const VarSet& out_vs = trace_vars();
  if (c.is_zero()) return Poly(out_vs);
  int dm = 0;
  int ds = 0;
  for (const auto& t : c.terms()) {
    dm = std::max(dm, static_cast<int>(t.mono.e[0]));
    ds = std::max(ds, static_cast<int>(t.mono.e[1]));
  }
  auto binom = binomials(std::max(dm, ds));
  std::size_t nx = static_cast<std::size_t>(dm + 1);
  std::size_t ny = static_cast<std::size_t>(ds + 1);
  // Unknown (i,j) sits in column i*ny + j; equation (α,β) in row α*ny + β.
  Matrix A(nx * ny, nx * ny);
  std::vector<Scalar> rhs(nx * ny);
  for (std::size_t al = 0; al < nx; ++al) {
    for (std::size_t be = 0; be < ny; ++be) {
      std::size_t row = al * ny + be;
      for (std::size_t i = al; i < nx; ++i) {
        Scalar cx = sym_coeff(binom, static_cast<int>(i), static_cast<int>(al));
        if (cx.is_zero()) continue;
        for (std::size_t j = be; j < ny; ++j) {
          Scalar cy = sym_coeff(binom, static_cast<int>(j), static_cast<int>(be));
          if (cy.is_zero()) continue;
          A(row, i * ny + j) = cx * cy;
        }
      }
    }
  }
  for (const auto& t : c.terms()) {
    if (t.mono.e[0] < 0 || t.mono.e[1] < 0) continue;
    rhs[static_cast<std::size_t>(t.mono.e[0]) * ny + static_cast<std::size_t>(t.mono.e[1])] = t.coeff;
  }
  // Row (α,β) only meets columns with i ≥ α and j ≥ β, with a unit entry on
  // the diagonal, so the system is upper triangular.
  std::size_t N = nx * ny;
  auto sol = solve_linear(std::move(A), std::move(rhs));
  if (!sol) throw InternalCheckError("trace coefficient system is inconsistent at z^" + std::to_string(k));
  std::vector<Poly::Term> terms;
  for (std::size_t col = 0; col < N; ++col) {
    const Scalar& v = (*sol)[col];
    if (v.is_zero()) continue;
    Monomial mono;
    mono.e[0] = static_cast<std::int16_t>(col / ny);
    mono.e[1] = static_cast<std::int16_t>(col % ny);
    mono.e[2] = static_cast<std::int16_t>(k);
    terms.push_back({mono, v});
  }
  return Poly::from_terms(out_vs, std::move(terms));
}

Poly trace_images(const Poly& f, const VarSet& target, const Poly& zimage) {
  Poly x = Poly::parse("m+m^-1", target);
  Poly y = Poly::parse("s+s^-1", target);
  return compose(embed(f, trace_vars()), target, {x, y, zimage});
}

}  // namespace

Symmetrized symmetrize(const Poly& p) {
  if (p.is_zero()) throw ShapeError("cannot symmetrize the zero polynomial");
  const VarSet& vs = p.vars();
  if (vs.size() < 2) throw ShapeError("symmetrize needs variables (m, s, ...)");
  Monomial shift;
  for (int v = 0; v < 2; ++v) {
    int lo = p.min_degree(v);
    int hi = p.degree(v);
    if ((lo + hi) % 2 != 0) throw ShapeError(p.to_string() + " is not σ-symmetrizable");
    shift.e[v] = static_cast<std::int16_t>(-(lo + hi) / 2);
  }
  Poly q = p.mul_monomial(shift);
  if (!(sigma(q) == q)) throw ShapeError(p.to_string() + " is not σ-symmetrizable");
  return {q, shift};
}

Poly normalize_trace(const Poly& f) {
  if (f.is_zero()) return f;
  Poly g = normalize(f);
  const Poly::Term* best = nullptr;
  auto key = [](const Monomial& m) { return std::array<int, 3>{m.e[2], m.e[0], m.e[1]}; };
  for (const auto& t : g.terms()) {
    if (!best || key(t.mono) > key(best->mono)) best = &t;
  }
  return best->coeff.canonical_sign() < 0 ? -g : g;
}

Poly trace_substitute(const Poly& ftilde) {
  const VarSet& vs = rep_vars();
  return trace_images(ftilde, vs, Poly::parse("m*s+m^-1*s^-1+r", vs));
}

TracePoly to_trace_coords(const Poly& p, const std::string& provenance) {
  Symmetrized sym = symmetrize(p);
  const VarSet& msz = msz_vars();
  int r = p.vars().require("r");
  std::vector<Poly> images;
  for (int v = 0; v < p.nvars(); ++v) {
    if (v == r) {
      images.push_back(Poly::parse("z-m*s-m^-1*s^-1", msz));
    } else {
      images.push_back(Poly::variable(msz, p.vars().name(v)));
    }
  }
  Poly T = compose(sym.q, msz, images);
  int dz = T.degree(2);
  Poly f(trace_vars());
  for (int k = dz; k >= 0; --k) f += block_to_xy(T.coefficient(2, k), k);
  // The identity must hold in full, including the quadrants not used in the solve.
  if (!(trace_images(f, msz, Poly::variable(msz, 2)) == T)) {
    throw InternalCheckError("trace polynomial does not reproduce the symmetrized input");
  }
  f = normalize_trace(f);
  if (!equal_up_to_unit(trace_substitute(f), p)) {
    throw InternalCheckError("back-substitution identity fails for the trace polynomial");
  }
  TracePoly out;
  out.ftilde = f;
  out.bidegree = bihomogenize(f).bidegree();
  out.provenance = provenance;
  return out;
}

std::vector<Component> component_split(const TracePoly& t, const FactorCaps& caps) {
  BiFactorization fac = factor_biform_interp(bihomogenize(t.ftilde), caps);
  std::vector<Component> out;
  for (const auto& f : fac.factors) {
    Poly g = dehomogenize(f.factor);
    if (g.is_constant()) continue;
    Component c;
    c.poly = normalize_trace(g);
    c.bidegree = f.factor.bidegree();
    c.multiplicity = f.multiplicity;
    c.conic_candidate = c.bidegree.a == 2;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    if (a.bidegree != b.bidegree) return a.bidegree < b.bidegree;
    return a.poly.to_string() < b.poly.to_string();
  });
  return out;
}

}  // namespace charvar
