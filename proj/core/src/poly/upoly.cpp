#include "charvar/poly/upoly.hpp"

#include "charvar/errors.hpp"

namespace charvar {

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::from_poly(const Poly& p, int var) {
  std::vector<Scalar> c;
  for (const auto& t : p.terms()) {
    for (int i = 0; i < p.nvars(); ++i) {
      if (i != var && t.mono.e[i] != 0) throw ShapeError("expected a univariate polynomial, got " + p.to_string());
    }
    int e = t.mono.e[var];
    if (e < 0) throw ShapeError("negative exponent in univariate conversion");
    if (static_cast<int>(c.size()) <= e) c.resize(static_cast<std::size_t>(e + 1));
    c[static_cast<std::size_t>(e)] = t.coeff;
  }
  return UPoly(std::move(c));
}

Poly UPoly::to_poly(const VarSet& vars, int var) const {
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Monomial m;
    m.e[var] = static_cast<std::int16_t>(i);
    terms.push_back({m, c_[i]});
  }
  return Poly::from_terms(vars, std::move(terms));
}

Field UPoly::field() const {
  Field f;
  for (const auto& s : c_) f = field_join(f, s.field());
  return f;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inverse();
}

UPoly UPoly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return UPoly(std::move(d));
}

Scalar UPoly::eval(const Scalar& t) const {
  Scalar acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Scalar& s) {
  for (auto& x : a.c_) x *= s;
  a.trim();
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  VarSet vs({var});
  return to_poly(vs, 0).to_string();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionError("univariate division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Scalar> r = a.coeffs();
  std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Scalar inv = b.lead().inverse();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    Scalar c = r[static_cast<std::size_t>(i)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking the coefficient of a.
  UPoly r0 = m;
  UPoly r1 = divmod(a, m).second;
  UPoly s0;
  UPoly s1 = UPoly::constant(Scalar(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DivisionError("polynomials are not coprime");
  return divmod(s0 * r0.lead().inverse(), m).second;
}

std::vector<UPoly> squarefree_decomposition(const UPoly& a) {
  std::vector<UPoly> out;
  if (a.degree() < 1) return out;
  UPoly f = a.monic();
  UPoly d = f.derivative();
  UPoly g = gcd(f, d);
  UPoly b = divmod(f, g).first;
  UPoly c = divmod(d, g).first;
  UPoly e = c - b.derivative();
  while (b.degree() > 0) {
    UPoly h = gcd(b, e);
    out.push_back(h);
    b = divmod(b, h).first;
    c = divmod(e, h).first;
    e = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace charvar
