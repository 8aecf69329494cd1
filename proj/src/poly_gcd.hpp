#pragma once

// Integer polynomial kernels behind QtPoly::gcd.  Not part of the public API.

#include <optional>
#include <vector>

#include <ctmac/bigrat.hpp>

namespace ctmac::detail
{

// Dense univariate polynomial over Z, index = degree, no trailing zeros.
using ZPoly = std::vector<BigInt>;
// Dense polynomial over Z[q][t]: rows[j] is the coefficient of t^j.
using Z2Poly = std::vector<ZPoly>;

void trim(ZPoly &a);
void trim(Z2Poly &a);

int degree(const ZPoly &a);
int deg_q(const Z2Poly &a);

BigInt content(const ZPoly &a);

// Exact quotient over Z, nullopt when b does not divide a.
std::optional<ZPoly> divide_exact(const ZPoly &a, const ZPoly &b);
std::optional<Z2Poly> divide_exact(const Z2Poly &a, const Z2Poly &b);

// gcd over Z[q] (modular, word-size primes + CRT). Leading coefficient positive.
ZPoly gcd(const ZPoly &a, const ZPoly &b);
// gcd over Z[q,t] (content in t via univariate gcds, primitive part via Brown's
// dense modular algorithm). Sign is left to the caller.
Z2Poly gcd(const Z2Poly &a, const Z2Poly &b);

} // namespace ctmac::detail
