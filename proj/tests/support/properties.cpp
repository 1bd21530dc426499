#include "properties.hpp"

#include <random>

#include "charvar/errors.hpp"
#include "charvar/pipeline/pipeline.hpp"
#include "charvar/poly/gcd.hpp"
#include "charvar/poly/upoly.hpp"
#include "charvar/traceelim/traceelim.hpp"

namespace charvar::props {

namespace {

Scalar random_rational(std::mt19937_64& rng, int range = 9) {
  long n = static_cast<long>(rng() % static_cast<unsigned>(2 * range + 1)) - range;
  long d = static_cast<long>(rng() % 5) + 1;
  return Scalar(Rational(BigInt(n), BigInt(d)));
}

Scalar random_nonzero(std::mt19937_64& rng) {
  Scalar s;
  do {
    s = random_rational(rng);
  } while (s.is_zero());
  return s;
}

Poly random_poly(std::mt19937_64& rng, const VarSet& vs, int terms, int maxdeg, int min_total = 0) {
  std::vector<Poly::Term> t;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    do {
      for (int v = 0; v < vs.size(); ++v) m.e[v] = static_cast<std::int16_t>(rng() % static_cast<unsigned>(maxdeg + 1));
    } while (m.total() < min_total);
    t.push_back({m, Scalar(static_cast<long>(rng() % 13) - 6)});
  }
  return Poly::from_terms(vs, std::move(t));
}

std::vector<Scalar> random_point(std::mt19937_64& rng, int n) {
  std::vector<Scalar> pt;
  for (int i = 0; i < n; ++i) pt.push_back(random_rational(rng));
  return pt;
}

// Number of distinct complex roots in u of F at fixed (x, y, z, w).
int distinct_roots_in_u(const Poly& F, const std::array<Scalar, 4>& xyzw) {
  Poly e = F.partial_eval(0, xyzw[0]).partial_eval(1, xyzw[1]).partial_eval(3, xyzw[2]).partial_eval(4, xyzw[3]);
  UPoly p = UPoly::from_poly(e, 2);
  if (p.is_zero()) return -1;
  return p.degree() - gcd(p, p.derivative()).degree();
}

}  // namespace

Outcome evaluation_homomorphism(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  const VarSet vs{"x", "y", "z"};
  for (int i = 0; i < cases; ++i) {
    ++o.cases;
    Poly p = random_poly(rng, vs, 6, 3);
    Poly q = random_poly(rng, vs, 5, 3);
    auto pt = random_point(rng, 3);
    Scalar pv = p.eval(pt);
    Scalar qv = q.eval(pt);
    if ((p * q).eval(pt) != pv * qv || (p + q).eval(pt) != pv + qv || (p - q).eval(pt) != pv - qv) {
      o.fail("ring operations do not commute with evaluation for p=" + p.to_string() + " q=" + q.to_string());
      continue;
    }
    // Trace map: f(m+1/m, s+1/s, ms+1/(ms)+r) evaluated two ways.
    Scalar m = random_nonzero(rng);
    Scalar s = random_nonzero(rng);
    Scalar r = random_rational(rng);
    Poly image = trace_substitute(p);
    std::vector<Scalar> msr{m, s, r};
    std::vector<Scalar> xyz{m + m.inverse(), s + s.inverse(), m * s + (m * s).inverse() + r};
    if (image.eval(msr) != p.eval(xyz)) o.fail("trace map does not commute with evaluation for " + p.to_string());
  }
  return o;
}

Outcome gcd_divides(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  const VarSet vs{"x", "y", "z"};
  for (int i = 0; i < cases; ++i) {
    Poly a = random_poly(rng, vs, 4, 2);
    Poly b = random_poly(rng, vs, 4, 2);
    Poly c = random_poly(rng, vs, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    ++o.cases;
    Poly ac = a * c;
    Poly bc = b * c;
    Poly g = gcd_multivariate(ac, bc);
    if (!try_divide(ac, g) || !try_divide(bc, g) || !try_divide(g, c)) {
      o.fail("gcd(" + ac.to_string() + ", " + bc.to_string() + ") = " + g.to_string());
    }
  }
  return o;
}

Outcome euler_relations(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  for (int i = 0; i < cases; ++i) {
    Poly f = random_poly(rng, trace_vars(), 6, 3);
    if (f.is_constant()) continue;
    ++o.cases;
    BiForm F = bihomogenize(f);
    if (!satisfies_euler_relations(F)) {
      o.fail("Euler relations fail for " + F.to_string());
    } else if (!(dehomogenize(F) == f)) {
      o.fail("dehomogenize does not invert bihomogenize for " + f.to_string());
    }
  }
  return o;
}

Outcome blowup_identity(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  const VarSet vs{"x", "y", "z"};
  for (int i = 0; i < cases; ++i) {
    Poly f = random_poly(rng, vs, 6, 3, 2);
    if (f.is_zero()) continue;
    ++o.cases;
    for (const auto& r : blow_up_origin(f)) {
      if (!blowup_identity_holds(f, r)) {
        o.fail("blow-up identity fails in chart " + std::to_string(r.chart) + " for " + f.to_string());
        break;
      }
    }
  }
  return o;
}

Outcome factorization_by_division(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  Outcome o;
  const VarSet vs{"x", "y", "z"};
  for (int i = 0; i < cases; ++i) {
    Poly p = random_poly(rng, vs, 3, 2) * random_poly(rng, vs, 3, 2);
    if (rng() % 2) p *= random_poly(rng, vs, 2, 1);
    if (p.is_constant()) continue;
    ++o.cases;
    auto fac = factor_multivariate(p);
    bool ok = true;
    for (const auto& f : fac.factors) ok = ok && try_divide(p, f.factor).has_value();
    if (!ok || !(fac.product() == p)) o.fail("factorization of " + p.to_string() + " is not verified by division");
  }
  return o;
}

Outcome fiber_dichotomy(const BiForm& F, std::uint64_t seed, int off_branch_points) {
  std::mt19937_64 rng(seed);
  Outcome o;
  EvenSplit split = split_even(F);
  BranchGeometry branch = branch_geometry(split.g);
  auto h_at = [&](const Scalar& z, const Scalar& w) { return split.h.eval(std::vector<Scalar>{z, w}); };
  int sampled = 0;
  while (sampled < off_branch_points) {
    std::array<Scalar, 4> p{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
    if ((p[0].is_zero() && p[1].is_zero()) || (p[2].is_zero() && p[3].is_zero())) continue;
    P1P1Point pt({p[0], p[1]}, {p[2], p[3]});
    if (eval_at(split.g.poly(), pt).is_zero() || h_at(p[2], p[3]).is_zero()) continue;
    ++sampled;
    ++o.cases;
    int k = distinct_roots_in_u(F.poly(), p);
    if (k != 2) o.fail("fiber over " + pt.to_string() + " has " + std::to_string(k) + " points, expected 2");
  }
  // Points of B off L: on each component of degree 1 in (z,w), pick [x:y]
  // and solve for [z:w].
  const int z = 3;
  const int w = 4;
  for (const auto& c : branch.components) {
    if (c.bidegree.b != 1) continue;
    for (int i = 0; i < 20; ++i) {
      Scalar x = random_rational(rng);
      Scalar y = random_nonzero(rng);
      Poly lin = c.factor.partial_eval(0, x).partial_eval(1, y);
      Scalar alpha = lin.coefficient(z, 1).partial_eval(w, Scalar(0)).constant_term();
      Scalar beta = lin.coefficient(w, 1).partial_eval(z, Scalar(0)).constant_term();
      if (alpha.is_zero() && beta.is_zero()) continue;
      std::array<Scalar, 4> p{x, y, beta, -alpha};
      if (h_at(p[2], p[3]).is_zero()) continue;
      ++o.cases;
      int k = distinct_roots_in_u(F.poly(), p);
      if (k != 1) {
        o.fail("fiber over a branch point " + P1P1Point({x, y}, {beta, -alpha}).to_string() + " has " +
               std::to_string(k) + " points, expected 1");
      }
    }
  }
  return o;
}

Outcome deterministic_report(const std::string& trace_polynomial) {
  Outcome o;
  ++o.cases;
  auto spec = PipelineSpec::polynomial(trace_polynomial);
  std::string first = to_json(run_pipeline(spec)).dump();
  std::string second = to_json(run_pipeline(spec)).dump();
  if (first != second) o.fail("reports differ between runs");
  return o;
}

}  // namespace charvar::props
