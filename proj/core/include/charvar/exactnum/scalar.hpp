#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "charvar/exactnum/rational.hpp"

namespace charvar {

/// A quadratic field ℚ(√d). radicand == 0 denotes ℚ itself; otherwise the
/// radicand is a squarefree integer >= 2.
struct Field {
  std::int64_t radicand = 0;

  bool is_rational() const { return radicand == 0; }
  std::string to_string() const;
  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact element a + b·√d of ℚ or of a real quadratic field ℚ(√d).
///
/// Normal form: when b == 0 the radicand is reset to 0 and the value is a
/// plain rational. Arithmetic between elements of ℚ(√d) and ℚ(√d') with
/// d != d' (both nonzero) raises IncompatibleFieldError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}                     // NOLINT(google-explicit-constructor)
  Scalar(int v) : a_(static_cast<long>(v)) {}   // NOLINT
  Scalar(Rational v) : a_(std::move(v)) {}      // NOLINT

  /// a + b·√d with square factors of d absorbed into b. d must be >= 0.
  static Scalar surd(const Rational& a, const Rational& b, std::int64_t d);

  /// Parses `p/q`, `a+b*sqrt(d)`, `b*sqrt(d)`, `sqrt(d)`, `a-sqrt(d)`.
  static Scalar parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  std::int64_t radicand() const { return d_; }
  Field field() const { return Field{d_}; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && a_.is_zero(); }
  bool is_one() const { return d_ == 0 && a_.is_one(); }

  /// Rational value; throws if the element is irrational.
  const Rational& as_rational() const;

  Scalar conjugate() const;
  /// Field norm a² − b²d.
  Rational norm() const;
  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Normalization sign: sign of the rational part, or of the surd part
  /// when the rational part vanishes.
  int canonical_sign() const;
  /// Sign of the element as a real number.
  int real_sign() const;

  std::string to_string() const;
  /// True when to_string() needs parentheses to act as a product factor.
  bool is_compound() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  void normalize();
  void adopt_field(const Scalar& o);

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

/// Common field of two scalars; throws IncompatibleFieldError on distinct
/// radicands.
Field scalar_field_join(const Scalar& x, const Scalar& y);
Field field_join(Field x, Field y);

/// n = k²·d with d squarefree; d carries the sign of n. Throws
/// CapExceededError if squarefreeness cannot be certified by trial division.
std::pair<BigInt, BigInt> squarefree_split(const BigInt& n);

/// Square root of a non-negative rational in ℚ or some ℚ(√d).
std::optional<Scalar> try_sqrt(const Rational& q);

/// Square root of x inside a field containing x. If x is rational the result
/// may live in a new quadratic field; otherwise it must lie in x's field.
std::optional<Scalar> try_sqrt(const Scalar& x);

/// Exact real comparison of two scalars of compatible fields: -1, 0, 1.
int compare_real(const Scalar& x, const Scalar& y);

/// Deterministic total order used for canonical sorting: real order within a
/// field, then (radicand, a, b) across fields.
bool canonical_less(const Scalar& x, const Scalar& y);

}  // namespace charvar
