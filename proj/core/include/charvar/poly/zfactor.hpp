#pragma once

#include <vector>

#include "charvar/exactnum/rational.hpp"

namespace charvar {

/// Dense integer polynomial, index = degree.
using ZPoly = std::vector<BigInt>;

/// Irreducible factorization over ℤ of a primitive, square-free polynomial
/// of positive degree (Berlekamp–Zassenhaus: Cantor–Zassenhaus modulo a
/// small prime, Hensel lifting, subset recombination). Factors are primitive
/// with positive leading coefficient; their product equals f up to sign.
std::vector<ZPoly> factor_squarefree_zpoly(const ZPoly& f);

}  // namespace charvar
