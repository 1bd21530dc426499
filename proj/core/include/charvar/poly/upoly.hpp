#pragma once

#include <vector>

#include "charvar/exactnum/scalar.hpp"
#include "charvar/poly/poly.hpp"

namespace charvar {

/// Dense univariate polynomial over a Scalar field; c[i] is the coefficient
/// of t^i. The zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Scalar& s) { return UPoly(std::vector<Scalar>{s}); }
  static UPoly monic_linear(const Scalar& root) { return UPoly({-root, Scalar(1)}); }

  /// Reads a polynomial that involves at most the variable `var`.
  static UPoly from_poly(const Poly& p, int var);
  Poly to_poly(const VarSet& vars, int var) const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Scalar& lead() const { return c_.back(); }
  Field field() const;

  UPoly monic() const;
  UPoly derivative() const;
  Scalar eval(const Scalar& t) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Scalar& s);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Euclidean division over the field: a = q·b + r with deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Inverse of a modulo m (a and m coprime); throws otherwise.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

/// Square-free decomposition (Yun): a = lc · Π f_i^i with f_i monic,
/// square-free and pairwise coprime. Entry i-1 holds f_i.
std::vector<UPoly> squarefree_decomposition(const UPoly& a);

}  // namespace charvar
