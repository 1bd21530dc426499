#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charvar/exactnum/scalar.hpp"

namespace charvar {

inline constexpr int kMaxVars = 6;

/// Ordered, immutable list of variable names. The declared order fixes the
/// graded-lexicographic monomial order (first variable is largest).
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

  int size() const { return static_cast<int>(names_->size()); }
  const std::string& name(int i) const { return (*names_)[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<int> index_of(std::string_view name) const;
  /// Index of `name`; throws ShapeError if absent.
  int require(std::string_view name) const;
  std::string to_string() const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Signed exponent vector (signed exponents support Laurent monomials).
struct Monomial {
  std::array<std::int16_t, kMaxVars> e{};

  int total() const {
    int t = 0;
    for (auto x : e) t += x;
    return t;
  }
  bool is_one() const {
    for (auto x : e) {
      if (x != 0) return false;
    }
    return true;
  }
  bool non_negative() const {
    for (auto x : e) {
      if (x < 0) return false;
    }
    return true;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(e[i] + o.e[i]);
    return m;
  }
  Monomial operator/(const Monomial& o) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::int16_t>(e[i] - o.e[i]);
    return m;
  }
  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (e[i] > o.e[i]) return false;
    }
    return true;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic comparison: -1, 0, 1.
int grlex_compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (auto x : m.e) {
      h ^= static_cast<std::uint16_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Sparse exact polynomial over a Scalar field, in the variables of a VarSet.
/// Exponents may be negative (Laurent polynomials); operations that need an
/// ordinary polynomial check `is_polynomial()`.
///
/// Terms are stored without zero coefficients, sorted by decreasing grlex.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Scalar coeff;
  };

  Poly() = default;
  explicit Poly(VarSet vars) : vars_(std::move(vars)) {}

  static Poly constant(const VarSet& vars, const Scalar& c);
  static Poly variable(const VarSet& vars, std::string_view name);
  static Poly variable(const VarSet& vars, int index);
  static Poly monomial(const VarSet& vars, const Monomial& m, const Scalar& c);
  /// Combines like terms and sorts.
  static Poly from_terms(const VarSet& vars, std::vector<Term> terms);

  /// Parses the canonical text grammar (and general +,-,*,^,() expressions).
  static Poly parse(std::string_view text, const VarSet& vars);

  const VarSet& vars() const { return vars_; }
  int nvars() const { return vars_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the monomial 1.
  Scalar constant_term() const;
  Scalar coefficient_of(const Monomial& m) const;
  const Term& leading() const;

  int degree(int var) const;
  int min_degree(int var) const;
  int total_degree() const;
  /// Lowest total degree among terms (the multiplicity at the origin).
  int low_total_degree() const;
  bool involves(int var) const;
  bool is_polynomial() const;
  bool is_rational() const;
  Field field() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  Poly operator-() const;
  Poly pow(int e) const;
  Poly mul_monomial(const Monomial& m) const;

  Scalar eval(std::span<const Scalar> point) const;
  /// Substitutes var := value, keeping the variable set.
  Poly partial_eval(int var, const Scalar& value) const;
  Poly derivative(int var) const;
  /// Coefficient of var^deg (a polynomial not involving var).
  Poly coefficient(int var, int deg) const;
  /// Coefficients in var, index = exponent (requires non-negative exponents in var).
  std::vector<Poly> coefficients(int var) const;

  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void canonicalize(std::vector<Term>& terms);

  VarSet vars_;
  std::vector<Term> terms_;
};

/// Rebuilds p from coefficient list in var (index = exponent).
Poly from_coefficients(const VarSet& vars, int var, const std::vector<Poly>& coeffs);

/// Composition: source variable i is replaced by images[i] (each in `target`).
Poly compose(const Poly& p, const VarSet& target, const std::vector<Poly>& images);

/// Substitutes the named bindings; unbound variables are mapped by name into
/// `target` (and must exist there).
Poly substitute(const Poly& p, const std::map<std::string, Poly>& bindings, const VarSet& target);

/// Re-expresses p in another variable set by name.
Poly embed(const Poly& p, const VarSet& target);

/// Exact division over the coefficient field; nullopt when the remainder is
/// nonzero. Both operands must be ordinary polynomials.
std::optional<Poly> try_divide(const Poly& a, const Poly& b);
/// Exact division; throws DivisionError when the remainder is nonzero.
Poly divide_exact(const Poly& a, const Poly& b);

/// Multiplies by the minimal monomial making all exponents non-negative.
/// Returns the polynomial and the monomial that was multiplied in.
std::pair<Poly, Monomial> clear_denominators(const Poly& p);

/// Largest monomial dividing every term (componentwise minimum exponents).
Monomial monomial_content(const Poly& p);

/// Positive rational content: gcd of all rational and surd parts.
Rational rational_content(const Poly& p);

/// Unit normalization: divide by content and by the sign of the leading
/// coefficient so that the canonical leading coefficient is positive.
Poly normalize(const Poly& p);

/// normalize() after also removing the monomial content (Laurent units).
Poly normalize_unit(const Poly& p);

/// a == c·m·b for some nonzero scalar c and monomial m.
bool equal_up_to_unit(const Poly& a, const Poly& b);

/// Pseudo-remainder prem(a, b) with respect to var.
Poly pseudo_remainder(const Poly& a, const Poly& b, int var);

}  // namespace charvar
