#include "charvar/poly/poly.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "charvar/errors.hpp"

namespace charvar {

// ---------------------------------------------------------------- VarSet

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  if (names.size() > static_cast<std::size_t>(kMaxVars)) {
    throw ShapeError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) {
      throw ShapeError("invalid variable name '" + n + "'");
    }
    if (n == "sqrt") throw ShapeError("'sqrt' is reserved");
    if (!seen.insert(n).second) throw ShapeError("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<int> VarSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i) {
    if ((*names_)[static_cast<std::size_t>(i)] == name) return i;
  }
  return std::nullopt;
}

int VarSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw ShapeError("variable '" + std::string(name) + "' not in " + to_string());
  return *i;
}

std::string VarSet::to_string() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += name(i);
  }
  return s + ")";
}

// ---------------------------------------------------------------- ordering

int grlex_compare(const Monomial& a, const Monomial& b) {
  int ta = a.total();
  int tb = b.total();
  if (ta != tb) return ta < tb ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_greater(const Poly::Term& a, const Poly::Term& b) { return grlex_compare(a.mono, b.mono) > 0; }

void check_same_vars(const Poly& a, const Poly& b) {
  if (!(a.vars() == b.vars())) {
    throw ShapeError("variable sets differ: " + a.vars().to_string() + " vs " + b.vars().to_string());
  }
}

// Merge two sorted term lists; `sign` is +1 or -1 for the second operand.
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, int sign) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) {
      c = -1;
    } else if (j == b.size()) {
      c = 1;
    } else {
      c = grlex_compare(a[i].mono, b[j].mono);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(sign > 0 ? b[j] : Poly::Term{b[j].mono, -b[j].coeff});
      ++j;
    } else {
      Scalar s = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- construction

void Poly::canonicalize(std::vector<Term>& terms) {
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms.size());
  for (auto& t : terms) {
    for (int i = vars_.size(); i < kMaxVars; ++i) {
      if (t.mono.e[i] != 0) throw ShapeError("exponent vector longer than variable set");
    }
    auto [it, inserted] = acc.try_emplace(t.mono, t.coeff);
    if (!inserted) it->second += t.coeff;
  }
  terms_.clear();
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms_.push_back({m, std::move(c)});
  }
  std::sort(terms_.begin(), terms_.end(), term_greater);
}

Poly Poly::constant(const VarSet& vars, const Scalar& c) {
  Poly p(vars);
  if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(const VarSet& vars, std::string_view name) { return variable(vars, vars.require(name)); }

Poly Poly::variable(const VarSet& vars, int index) {
  if (index < 0 || index >= vars.size()) throw ShapeError("variable index out of range");
  Monomial m;
  m.e[static_cast<std::size_t>(index)] = 1;
  return monomial(vars, m, Scalar(1));
}

Poly Poly::monomial(const VarSet& vars, const Monomial& m, const Scalar& c) {
  Poly p(vars);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(const VarSet& vars, std::vector<Term> terms) {
  Poly p(vars);
  p.canonicalize(terms);
  return p;
}

// ---------------------------------------------------------------- queries

Scalar Poly::constant_term() const { return coefficient_of(Monomial{}); }

Scalar Poly::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return grlex_compare(t.mono, key) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Scalar(0);
}

const Poly::Term& Poly::leading() const {
  if (terms_.empty()) throw ShapeError("leading term of zero polynomial");
  return terms_.front();
}

int Poly::degree(int var) const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.e[var];
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.e[var]);
  return d;
}

int Poly::min_degree(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().mono.e[var];
  for (const auto& t : terms_) d = std::min<int>(d, t.mono.e[var]);
  return d;
}

int Poly::total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.total(); }

int Poly::low_total_degree() const { return terms_.empty() ? -1 : terms_.back().mono.total(); }

bool Poly::involves(int var) const {
  for (const auto& t : terms_) {
    if (t.mono.e[var] != 0) return true;
  }
  return false;
}

bool Poly::is_polynomial() const {
  for (const auto& t : terms_) {
    if (!t.mono.non_negative()) return false;
  }
  return true;
}

bool Poly::is_rational() const {
  for (const auto& t : terms_) {
    if (!t.coeff.is_rational()) return false;
  }
  return true;
}

Field Poly::field() const {
  Field f;
  for (const auto& t : terms_) f = field_join(f, t.coeff.field());
  return f;
}

// ---------------------------------------------------------------- arithmetic

Poly& Poly::operator+=(const Poly& o) {
  check_same_vars(*this, o);
  terms_ = merge_terms(terms_, o.terms_, 1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same_vars(*this, o);
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_vars(a, b);
  Poly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (b.size() == 1) return a.mul_monomial(b.terms_[0].mono) * b.terms_[0].coeff;
  if (a.size() == 1) return b.mul_monomial(a.terms_[0].mono) * a.terms_[0].coeff;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 1);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m = ta.mono * tb.mono;
      auto [it, inserted] = acc.try_emplace(m, ta.coeff);
      if (inserted) {
        it->second *= tb.coeff;
      } else {
        it->second += ta.coeff * tb.coeff;
      }
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.push_back({m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  return out;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1) throw ShapeError("negative power of a non-monomial");
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(-terms_[0].mono.e[i] * (-e));
    return monomial(vars_, m, terms_[0].coeff.pow(e));
  }
  Poly result = constant(vars_, Scalar(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::mul_monomial(const Monomial& m) const {
  Poly p = *this;
  for (auto& t : p.terms_) t.mono = t.mono * m;
  return p;
}

// ---------------------------------------------------------------- evaluation

Scalar Poly::eval(std::span<const Scalar> point) const {
  if (static_cast<int>(point.size()) != vars_.size()) throw ShapeError("evaluation point has wrong arity");
  Scalar sum(0);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (int i = 0; i < vars_.size(); ++i) {
      if (t.mono.e[i] != 0) v *= point[static_cast<std::size_t>(i)].pow(t.mono.e[i]);
    }
    sum += v;
  }
  return sum;
}

Poly Poly::partial_eval(int var, const Scalar& value) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  std::unordered_map<int, Scalar> powers;
  for (const auto& t : terms_) {
    int e = t.mono.e[var];
    Term nt{t.mono, t.coeff};
    nt.mono.e[var] = 0;
    if (e != 0) {
      auto it = powers.find(e);
      if (it == powers.end()) it = powers.emplace(e, value.pow(e)).first;
      nt.coeff *= it->second;
    }
    out.push_back(std::move(nt));
  }
  return from_terms(vars_, std::move(out));
}

Poly Poly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono.e[var];
    if (e == 0) continue;
    Term nt{t.mono, t.coeff * Scalar(e)};
    nt.mono.e[var] = static_cast<std::int16_t>(e - 1);
    out.push_back(std::move(nt));
  }
  return from_terms(vars_, std::move(out));
}

Poly Poly::coefficient(int var, int deg) const {
  Poly p(vars_);
  for (const auto& t : terms_) {
    if (t.mono.e[var] == deg) {
      Term nt = t;
      nt.mono.e[var] = 0;
      p.terms_.push_back(std::move(nt));
    }
  }
  // Removing one coordinate keeps the relative grlex order only within a
  // fixed degree in `var`, which is what we selected.
  return p;
}

std::vector<Poly> Poly::coefficients(int var) const {
  if (min_degree(var) < 0) throw ShapeError("negative exponent in coefficient extraction");
  std::vector<Poly> out(static_cast<std::size_t>(std::max(degree(var), 0) + 1), Poly(vars_));
  for (const auto& t : terms_) {
    Term nt = t;
    nt.mono.e[var] = 0;
    out[static_cast<std::size_t>(t.mono.e[var])].terms_.push_back(std::move(nt));
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

Poly from_coefficients(const VarSet& vars, int var, const std::vector<Poly>& coeffs) {
  std::vector<Poly::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Poly::Term nt = t;
      nt.mono.e[var] = static_cast<std::int16_t>(nt.mono.e[var] + static_cast<int>(k));
      terms.push_back(std::move(nt));
    }
  }
  return Poly::from_terms(vars, std::move(terms));
}

// ---------------------------------------------------------------- printing

namespace {

std::string monomial_text(const VarSet& vars, const Monomial& m) {
  std::string s;
  for (int i = 0; i < vars.size(); ++i) {
    int e = m.e[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.name(i);
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono = monomial_text(vars_, t.mono);
    const Scalar& c = t.coeff;
    std::string body;
    bool negative = false;
    if (c.is_compound()) {
      body = "(" + c.to_string() + ")";
      if (!mono.empty()) body += "*" + mono;
    } else {
      negative = c.canonical_sign() < 0;
      Scalar mag = negative ? -c : c;
      if (mono.empty()) {
        body = mag.to_string();
      } else if (mag.is_one()) {
        body = mono;
      } else {
        body = mag.to_string() + "*" + mono;
      }
    }
    if (first) {
      out += negative ? "-" + body : body;
    } else {
      out += negative ? "-" : "+";
      out += body;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : vars_(vars) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }
  }

  Poly run() {
    if (s_.empty()) fail("empty polynomial");
    Poly p = expr();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    while (pos_ < s_.size()) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly term() {
    Poly acc = unary();
    while (pos_ < s_.size()) {
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= d.constant_term().inverse();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = atom();
    if (!accept('^')) return base;
    bool neg = accept('-');
    if (!neg) accept('+');
    long e = integer();
    if (e > 10000) fail("exponent too large");
    if (neg) {
      if (base.size() != 1) fail("negative power of a non-monomial");
      return base.pow(-static_cast<int>(e));
    }
    return base.pow(static_cast<int>(e));
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Poly atom() {
    if (accept('(')) {
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(vars_, Scalar(Rational::parse(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (name == "sqrt") {
        if (!accept('(')) fail("expected '(' after sqrt");
        long d = integer();
        if (!accept(')')) fail("expected ')'");
        return Poly::constant(vars_, Scalar::surd(Rational(0), Rational(1), d));
      }
      auto idx = vars_.index_of(name);
      if (!idx) fail("unknown variable '" + name + "'");
      return Poly::variable(vars_, *idx);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const VarSet& vars_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text, const VarSet& vars) { return Parser(text, vars).run(); }

// ---------------------------------------------------------------- substitution

namespace {

Poly image_power(std::vector<std::unordered_map<int, Poly>>& cache, const std::vector<Poly>& images, int var, int e) {
  auto& slot = cache[static_cast<std::size_t>(var)];
  auto it = slot.find(e);
  if (it != slot.end()) return it->second;
  Poly p = images[static_cast<std::size_t>(var)].pow(e);
  slot.emplace(e, p);
  return p;
}

}  // namespace

Poly compose(const Poly& p, const VarSet& target, const std::vector<Poly>& images) {
  if (static_cast<int>(images.size()) != p.nvars()) throw ShapeError("compose: wrong number of images");
  for (const auto& im : images) {
    if (!(im.vars() == target)) throw ShapeError("compose: image in the wrong variable set");
  }
  std::vector<std::unordered_map<int, Poly>> cache(images.size());
  Poly out(target);
  for (const auto& t : p.terms()) {
    Poly prod = Poly::constant(target, t.coeff);
    for (int i = 0; i < p.nvars(); ++i) {
      int e = t.mono.e[i];
      if (e != 0) prod *= image_power(cache, images, i, e);
    }
    out += prod;
  }
  return out;
}

Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings, const VarSet& target) {
  for (const auto& [name, _] : bindings) {
    if (!p.vars().index_of(name)) throw ShapeError("substitute: '" + name + "' is not a variable of " + p.vars().to_string());
  }
  std::vector<Poly> images;
  for (int i = 0; i < p.nvars(); ++i) {
    auto it = bindings.find(p.vars().name(i));
    if (it != bindings.end()) {
      images.push_back(embed(it->second, target));
    } else if (target.index_of(p.vars().name(i))) {
      images.push_back(Poly::variable(target, p.vars().name(i)));
    } else if (p.involves(i)) {
      throw ShapeError("substitute: unbound variable '" + p.vars().name(i) + "' missing from " + target.to_string());
    } else {
      images.emplace_back(target);
    }
  }
  return compose(p, target, images);
}

Poly embed(const Poly& p, const VarSet& target) {
  if (p.vars() == target) return p;
  std::vector<int> map(static_cast<std::size_t>(p.nvars()), -1);
  for (int i = 0; i < p.nvars(); ++i) {
    auto j = target.index_of(p.vars().name(i));
    if (j) map[static_cast<std::size_t>(i)] = *j;
  }
  std::vector<Poly::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Poly::Term nt{Monomial{}, t.coeff};
    for (int i = 0; i < p.nvars(); ++i) {
      if (t.mono.e[i] == 0) continue;
      if (map[static_cast<std::size_t>(i)] < 0) {
        throw ShapeError("embed: variable '" + p.vars().name(i) + "' missing from " + target.to_string());
      }
      nt.mono.e[map[static_cast<std::size_t>(i)]] = t.mono.e[i];
    }
    terms.push_back(std::move(nt));
  }
  return Poly::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------- division

Monomial monomial_content(const Poly& p) {
  Monomial m;
  if (p.is_zero()) return m;
  m = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = std::min(m.e[i], t.mono.e[i]);
  }
  return m;
}

namespace {

std::optional<Poly> divide_polynomial(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionError("division by zero polynomial");
  Poly q(a.vars());
  if (a.is_zero()) return q;
  for (int v = 0; v < a.nvars(); ++v) {
    if (a.degree(v) < b.degree(v)) return std::nullopt;
  }
  if (b.size() == 1) {
    const auto& lt = b.leading();
    Scalar inv = lt.coeff.inverse();
    std::vector<Poly::Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!lt.mono.divides(t.mono)) return std::nullopt;
      terms.push_back({t.mono / lt.mono, t.coeff * inv});
    }
    return Poly::from_terms(a.vars(), std::move(terms));
  }
  const auto& lb = b.leading();
  Scalar inv = lb.coeff.inverse();
  Poly r = a;
  std::vector<Poly::Term> qterms;
  while (!r.is_zero()) {
    const auto& lr = r.leading();
    if (!lb.mono.divides(lr.mono)) return std::nullopt;
    Monomial m = lr.mono / lb.mono;
    Scalar c = lr.coeff * inv;
    qterms.push_back({m, c});
    r -= b.mul_monomial(m) * c;
  }
  return Poly::from_terms(a.vars(), std::move(qterms));
}

}  // namespace

std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
  check_same_vars(a, b);
  if (a.is_polynomial() && b.is_polynomial()) return divide_polynomial(a, b);
  // Laurent case: monomials are units, so divide the cleared numerators.
  Monomial ma = monomial_content(a);
  Monomial mb = monomial_content(b);
  auto q = divide_polynomial(a.mul_monomial(Monomial{} / ma), b.mul_monomial(Monomial{} / mb));
  if (!q) return std::nullopt;
  return q->mul_monomial(ma / mb);
}

Poly divide_exact(const Poly& a, const Poly& b) {
  auto q = try_divide(a, b);
  if (!q) throw DivisionError("inexact division of " + a.to_string() + " by " + b.to_string());
  return *q;
}

std::pair<Poly, Monomial> clear_denominators(const Poly& p) {
  Monomial m;
  for (int i = 0; i < p.nvars(); ++i) {
    m.e[i] = static_cast<std::int16_t>(std::max(0, -p.min_degree(i)));
  }
  return {p.mul_monomial(m), m};
}

// ---------------------------------------------------------------- normalization

Rational rational_content(const Poly& p) {
  Rational g(0);
  for (const auto& t : p.terms()) {
    g = rational_gcd(g, t.coeff.rational_part());
    g = rational_gcd(g, t.coeff.surd_part());
  }
  return g;
}

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (p.leading().coeff.canonical_sign() < 0) c = -c;
  return p * Scalar(c.inverse());
}

Poly normalize_unit(const Poly& p) {
  if (p.is_zero()) return p;
  return normalize(p.mul_monomial(Monomial{} / monomial_content(p)));
}

bool equal_up_to_unit(const Poly& a, const Poly& b) {
  if (!(a.vars() == b.vars()) || a.size() != b.size()) return false;
  if (a.is_zero()) return true;
  Scalar c = a.leading().coeff / b.leading().coeff;
  Monomial m = a.leading().mono / b.leading().mono;
  return a == b.mul_monomial(m) * c;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
  int db = b.degree(var);
  if (db < 0) throw DivisionError("pseudo-remainder by zero");
  int da = a.degree(var);
  if (da < db) return a;
  Poly lcb = b.coefficient(var, db);
  Poly r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree(var) >= db) {
    int dr = r.degree(var);
    Poly lcr = r.coefficient(var, dr);
    Monomial shift;
    shift.e[var] = static_cast<std::int16_t>(dr - db);
    r = lcb * r - (lcr * b).mul_monomial(shift);
    ++steps;
  }
  int missing = da - db + 1 - steps;
  if (missing > 0) r *= lcb.pow(missing);
  return r;
}

}  // namespace charvar
