#include "charvar/linkgroup/linkgroup.hpp"

#include <sstream>
#include <tuple>

#include "charvar/errors.hpp"
#include "charvar/poly/gcd.hpp"

namespace charvar {

std::string GroupWord::to_string() const {
  std::string s;
  for (const auto& l : letters) {
    if (!s.empty()) s += ' ';
    s += l.gen;
    if (l.exp != 1) s += "^" + std::to_string(l.exp);
  }
  return s;
}

GroupWord GroupWord::parse(const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok[0] != 'a' && tok[0] != 'b') throw ParseError("unknown generator in '" + tok + "'");
    Letter l{tok[0], 1};
    std::string rest = tok.substr(1);
    if (rest == "^-1") {
      l.exp = -1;
    } else if (!rest.empty() && rest != "^1") {
      throw ParseError("bad exponent in '" + tok + "'");
    }
    w.letters.push_back(l);
  }
  if (w.letters.empty()) throw ParseError("empty word");
  return w;
}

int surgery_exponent(int n, int i) {
  long long q = static_cast<long long>(i) * (4LL * n - 1) / (8LL * n);
  return q % 2 == 0 ? 1 : -1;
}

GroupWord surgery_word(int n) {
  if (n < 1) throw ShapeError("surgery word needs n >= 1");
  GroupWord w;
  for (int i = 1; i <= 8 * n - 1; ++i) w.letters.push_back({i % 2 == 1 ? 'b' : 'a', surgery_exponent(n, i)});
  return w;
}

std::string schubert_label(int n) { return "S(" + std::to_string(8 * n) + "," + std::to_string(4 * n + 1) + ")"; }

const VarSet& rep_vars() {
  static const VarSet vs{"m", "s", "r"};
  return vs;
}

SymMat2 SymMat2::identity() {
  Poly one = Poly::constant(rep_vars(), Scalar(1));
  Poly zero(rep_vars());
  return {one, zero, zero, one};
}

Poly SymMat2::det() const { return e11 * e22 - e12 * e21; }

SymMat2 operator*(const SymMat2& x, const SymMat2& y) {
  return {x.e11 * y.e11 + x.e12 * y.e21, x.e11 * y.e12 + x.e12 * y.e22, x.e21 * y.e11 + x.e22 * y.e21,
          x.e21 * y.e12 + x.e22 * y.e22};
}

SymMat2 operator-(const SymMat2& x, const SymMat2& y) {
  return {x.e11 - y.e11, x.e12 - y.e12, x.e21 - y.e21, x.e22 - y.e22};
}

SymMat2 generator_matrix(char gen, int exp) {
  const VarSet& vs = rep_vars();
  auto P = [&](const char* t) { return Poly::parse(t, vs); };
  if (gen == 'a') {
    if (exp == 1) return {P("m"), P("1"), P("0"), P("m^-1")};
    if (exp == -1) return {P("m^-1"), P("-1"), P("0"), P("m")};
  } else if (gen == 'b') {
    if (exp == 1) return {P("s"), P("0"), P("r"), P("s^-1")};
    if (exp == -1) return {P("s^-1"), P("0"), P("-r"), P("s")};
  }
  throw ShapeError(std::string("no matrix for letter ") + gen + "^" + std::to_string(exp));
}

SymMat2 rep_matrices(const GroupWord& w) {
  SymMat2 acc = SymMat2::identity();
  for (const auto& l : w.letters) acc = acc * generator_matrix(l.gen, l.exp);
  return acc;
}

RelationPolys relation_polys(const GroupWord& w) {
  const VarSet& vs = rep_vars();
  SymMat2 W = rep_matrices(w);
  SymMat2 A = generator_matrix('a', 1);
  SymMat2 C = W * A - A * W;
  Poly m = Poly::variable(vs, "m");
  Poly minv = Poly::parse("m^-1", vs);
  Poly p2 = W.e11 + W.e12 * (minv - m) - W.e22;
  if (!(C.e11 == -W.e21) || !(C.e12 == p2) || !(C.e21 == W.e21 * (m - minv)) || !(C.e22 == W.e21)) {
    throw InternalCheckError("commutator matrix does not have the expected shape");
  }
  RelationPolys out;
  std::tie(out.p1, out.unit1) = clear_denominators(W.e21);
  std::tie(out.p2, out.unit2) = clear_denominators(p2);
  return out;
}

NonabelianPart nonabelian_part(const Poly& p1, const Poly& p2) {
  if (p1.is_zero() || p2.is_zero()) throw ShapeError("relation polynomials must be nonzero");
  NonabelianPart out;
  out.p = gcd_multivariate(p1, p2);
  if (out.p.is_zero()) throw InternalCheckError("zero gcd of nonzero relation polynomials");
  out.g1 = divide_exact(p1, out.p);
  out.g2 = divide_exact(p2, out.p);
  if (!gcd_multivariate(out.g1, out.g2).is_constant()) {
    throw InternalCheckError("cofactors " + out.g1.to_string() + " and " + out.g2.to_string() + " are not coprime");
  }
  const VarSet& vs = p1.vars();
  if (vs == rep_vars()) {
    out.cofactors_abelian = equal_up_to_unit(out.g1, Poly::parse("r*s", vs)) &&
                            equal_up_to_unit(out.g2, Poly::parse("s^2-1", vs));
  }
  out.trivial = out.p.is_constant();
  return out;
}

}  // namespace charvar
