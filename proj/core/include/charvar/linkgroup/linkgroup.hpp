#pragma once

#include <string>
#include <vector>

#include "charvar/poly/poly.hpp"

namespace charvar {

/// One letter of a word in the generators a, b.
struct Letter {
  char gen = 'a';
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct GroupWord {
  std::vector<Letter> letters;

  /// Text form "b a b^-1 a^-1 b^-1 a b".
  std::string to_string() const;
  /// Whitespace-separated letters a, b, a^-1, b^-1, a^1, b^1. Throws
  /// ParseError.
  static GroupWord parse(const std::string& text);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

/// ε_i = (−1)^⌊i(4n−1)/(8n)⌋ for the relator of 1/n surgery on the Borromean
/// rings; letter i is b for odd i and a for even i.
int surgery_exponent(int n, int i);
GroupWord surgery_word(int n);
/// Schubert normal form label carried alongside the word.
std::string schubert_label(int n);

/// Variables (m, s, r) of the representation variety.
const VarSet& rep_vars();

/// 2×2 matrix with Laurent polynomial entries in (m, s, r).
struct SymMat2 {
  Poly e11, e12, e21, e22;

  static SymMat2 identity();
  Poly det() const;
  friend SymMat2 operator*(const SymMat2& x, const SymMat2& y);
  friend SymMat2 operator-(const SymMat2& x, const SymMat2& y);
  friend bool operator==(const SymMat2&, const SymMat2&) = default;
};

/// ā = [[m,1],[0,1/m]] and b̄ = [[s,0],[r,1/s]].
SymMat2 generator_matrix(char gen, int exp);
/// Product of the letter matrices, composed left to right.
SymMat2 rep_matrices(const GroupWord& w);

struct RelationPolys {
  Poly p1;            ///< w21 with denominators cleared
  Poly p2;            ///< w11 + w12(1/m − m) − w22 with denominators cleared
  Monomial unit1;     ///< monomial multiplied into w21
  Monomial unit2;     ///< monomial multiplied into the Laurent p2
};

/// Throws InternalCheckError if w̄ā − āw̄ does not have the expected shape
/// [[−w21, p2], [w21(m − 1/m), w21]].
RelationPolys relation_polys(const GroupWord& w);

struct NonabelianPart {
  Poly p;   ///< normalized gcd(p1, p2)
  Poly g1;  ///< p1 / p
  Poly g2;  ///< p2 / p
  /// g1 = unit·rs and g2 = unit·(s² − 1): the cofactors cut out the abelian locus.
  bool cofactors_abelian = false;
  /// p is a unit: there is no nonabelian component.
  bool trivial = false;
};

NonabelianPart nonabelian_part(const Poly& p1, const Poly& p2);

}  // namespace charvar
