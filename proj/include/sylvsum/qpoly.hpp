#pragma once

// Dense univariate polynomials over Q, coefficient i multiplies x^i.
// Only what the number-ring code needs: the zero polynomial is the empty vector
// and every result is trimmed of trailing zeros.

#include "sylvsum/exact.hpp"

#include <string>
#include <vector>

namespace sylvsum::qpoly {

using Poly = std::vector<BigRational>;

void trim(Poly& p);
int degree(const Poly& p); // -1 for zero

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const BigRational& c);

struct DivMod {
    Poly quotient;
    Poly remainder;
};
DivMod divmod(const Poly& num, const Poly& den);

/// g = gcd(a, b) made monic, with s*a + t*b = g.
struct Bezout {
    Poly gcd;
    Poly s;
    Poly t;
};
Bezout xgcd(const Poly& a, const Poly& b);

/// x^n - 1 divided by Phi_d for every proper divisor d of n.
Poly cyclotomic(unsigned n);

std::string format(const Poly& p, const std::string& var = "x");

} // namespace sylvsum::qpoly
