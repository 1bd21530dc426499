#include "charvar/exactnum/scalar.hpp"

#include <cctype>
#include <cstdlib>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

// Trial division bound; cofactors below kTrialLimit² are certified prime.
constexpr unsigned long kTrialLimit = 1000000UL;

bool is_perfect_square(const BigInt& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

}  // namespace

std::string Field::to_string() const {
  return radicand == 0 ? "Q" : "Q(sqrt(" + std::to_string(radicand) + "))";
}

std::pair<BigInt, BigInt> squarefree_split(const BigInt& n) {
  if (n == 0) return {BigInt(0), BigInt(0)};
  BigInt rest = abs(n);
  BigInt k = 1;
  BigInt d = 1;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    BigInt pp = static_cast<unsigned long>(p) * static_cast<unsigned long>(p);
    if (pp > rest) break;
    int e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) k *= p;
    if (e % 2 == 1) d *= p;
  }
  if (rest > 1) {
    if (is_perfect_square(rest)) {
      BigInt root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      k *= root;
    } else {
      BigInt bound = BigInt(kTrialLimit) * BigInt(kTrialLimit);
      if (rest >= bound) {
        throw CapExceededError("cannot certify squarefree part of " + n.get_str());
      }
      d *= rest;
    }
  }
  if (n < 0) d = -d;
  return {k, d};
}

Scalar Scalar::surd(const Rational& a, const Rational& b, std::int64_t d) {
  if (d < 0) throw IncompatibleFieldError("complex radicands are not supported (d = " + std::to_string(d) + ")");
  Scalar s;
  s.a_ = a;
  if (d == 0 || b.is_zero()) return s;
  auto [k, free] = squarefree_split(BigInt(static_cast<long>(d)));
  if (free == 1) {
    s.a_ += b * Rational(k);
    return s;
  }
  s.b_ = b * Rational(k);
  s.d_ = free.get_si();
  return s;
}

const Rational& Scalar::as_rational() const {
  if (d_ != 0) throw IncompatibleFieldError("expected a rational, got " + to_string());
  return a_;
}

void Scalar::normalize() {
  if (b_.is_zero()) d_ = 0;
}

void Scalar::adopt_field(const Scalar& o) {
  if (o.d_ == 0 || o.d_ == d_) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  throw IncompatibleFieldError("incompatible radicands " + std::to_string(d_) + " and " +
                               std::to_string(o.d_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt_field(o);
  a_ += o.a_;
  if (o.d_ != 0) b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt_field(o);
  a_ -= o.a_;
  if (o.d_ != 0) b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.d_ == 0) {
    a_ *= o.a_;
    if (d_ != 0) b_ *= o.a_;
    normalize();
    return *this;
  }
  if (d_ == 0) {
    Rational a = a_;
    a_ = a * o.a_;
    b_ = a * o.b_;
    d_ = o.d_;
    normalize();
    return *this;
  }
  adopt_field(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(d_));
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.d_ == 0) {
    if (o.a_.is_zero()) throw DivisionError("division by zero scalar");
    a_ /= o.a_;
    if (d_ != 0) b_ /= o.a_;
    normalize();
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  s.a_ = -s.a_;
  s.b_ = -s.b_;
  return s;
}

Scalar Scalar::conjugate() const {
  Scalar s = *this;
  s.b_ = -s.b_;
  return s;
}

Rational Scalar::norm() const {
  if (d_ == 0) return a_ * a_;
  return a_ * a_ - b_ * b_ * Rational(static_cast<long>(d_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero scalar");
  if (d_ == 0) return Scalar(a_.inverse());
  Rational n = norm();
  Scalar s;
  s.a_ = a_ / n;
  s.b_ = -b_ / n;
  s.d_ = d_;
  return s;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

int Scalar::canonical_sign() const { return a_.is_zero() ? b_.sign() : a_.sign(); }

int Scalar::real_sign() const {
  int sa = a_.sign();
  int sb = d_ == 0 ? 0 : b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * Rational(static_cast<long>(d_));
  if (a2 > b2d) return sa;
  if (a2 < b2d) return sb;
  return 0;
}

bool Scalar::is_compound() const { return d_ != 0 && !a_.is_zero(); }

std::string Scalar::to_string() const {
  if (d_ == 0) return a_.to_string();
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  std::string surd;
  Rational mag = b_.abs();
  if (mag.is_one()) {
    surd = root;
  } else {
    surd = mag.to_string() + "*" + root;
  }
  if (a_.is_zero()) return (b_.sign() < 0 ? "-" : "") + surd;
  return a_.to_string() + (b_.sign() < 0 ? "-" : "+") + surd;
}

Scalar Scalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return Scalar(Rational::parse(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw ParseError("malformed surd literal '" + s + "'");
  }
  std::string rad_text = s.substr(pos + 5, close - pos - 5);
  Rational rad = Rational::parse(rad_text);
  if (!rad.is_integer() || rad.sign() < 0) throw ParseError("radicand must be a non-negative integer in '" + s + "'");
  std::string prefix = s.substr(0, pos);
  bool star = !prefix.empty() && prefix.back() == '*';
  if (star) prefix.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = prefix.size(); i-- > 1;) {
    if (prefix[i] == '+' || prefix[i] == '-') {
      split = i;
      break;
    }
  }
  std::string a_text = split == std::string::npos ? "" : prefix.substr(0, split);
  std::string b_text = split == std::string::npos ? prefix : prefix.substr(split);
  Rational b;
  if (star) {
    if (b_text.empty() || b_text == "+" || b_text == "-") throw ParseError("missing surd coefficient in '" + s + "'");
    b = Rational::parse(b_text);
  } else if (b_text.empty() || b_text == "+") {
    b = Rational(1);
  } else if (b_text == "-") {
    b = Rational(-1);
  } else {
    throw ParseError("malformed surd literal '" + s + "'");
  }
  Rational a = a_text.empty() ? Rational(0) : Rational::parse(a_text);
  return surd(a, b, rad.numerator().get_si());
}

Field field_join(Field x, Field y) {
  if (x.radicand == 0) return y;
  if (y.radicand == 0 || x.radicand == y.radicand) return x;
  throw IncompatibleFieldError("incompatible radicands " + std::to_string(x.radicand) + " and " +
                               std::to_string(y.radicand));
}

Field scalar_field_join(const Scalar& x, const Scalar& y) { return field_join(x.field(), y.field()); }

std::optional<Scalar> try_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  if (q.is_zero()) return Scalar(0);
  BigInt prod = q.numerator() * q.denominator();
  auto [k, d] = squarefree_split(prod);
  Rational coeff(k, q.denominator());
  if (d == 1) return Scalar(coeff);
  if (!d.fits_slong_p()) return std::nullopt;
  return Scalar::surd(Rational(0), coeff, d.get_si());
}

std::optional<Scalar> try_sqrt(const Scalar& x) {
  if (x.is_rational()) return try_sqrt(x.rational_part());
  // (p + q√d)² = p² + q²d + 2pq√d, so p² = (a ± √N)/2 with N = a² − b²d.
  const Rational& a = x.rational_part();
  const Rational& b = x.surd_part();
  auto root_norm = try_sqrt(x.norm());
  if (!root_norm || !root_norm->is_rational()) return std::nullopt;
  for (int sgn : {1, -1}) {
    Rational p2 = (a + Rational(sgn) * root_norm->as_rational()) / Rational(2);
    if (p2.sign() <= 0) continue;
    auto p = try_sqrt(p2);
    if (!p || !p->is_rational()) continue;
    Rational q = b / (Rational(2) * p->as_rational());
    Scalar cand = Scalar::surd(p->as_rational(), q, x.radicand());
    if (cand * cand == x) return cand;
  }
  return std::nullopt;
}

int compare_real(const Scalar& x, const Scalar& y) { return (x - y).real_sign(); }

bool canonical_less(const Scalar& x, const Scalar& y) {
  if (x.radicand() == 0 || y.radicand() == 0 || x.radicand() == y.radicand()) {
    return compare_real(x, y) < 0;
  }
  if (x.radicand() != y.radicand()) return x.radicand() < y.radicand();
  if (x.rational_part() != y.rational_part()) return x.rational_part() < y.rational_part();
  return x.surd_part() < y.surd_part();
}

}  // namespace charvar
