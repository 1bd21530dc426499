#include "charvar/exactnum/rational.hpp"

#include <cctype>

#include "charvar/errors.hpp"

namespace charvar {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  bool seen_slash = false;
  bool digits_before = false;
  bool digits_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digits_after : digits_before) = true;
    } else if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else {
      throw ParseError("malformed rational literal '" + s + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after)) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

Rational Rational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

std::string Rational::to_string() const { return q_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  BigInt n, d;
  mpz_gcd(n.get_mpz_t(), a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
  mpz_lcm(d.get_mpz_t(), a.raw().get_den_mpz_t(), b.raw().get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace charvar
