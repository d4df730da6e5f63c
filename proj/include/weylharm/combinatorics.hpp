#pragma once

#include <vector>

#include "weylharm/rational.hpp"

namespace weylharm {

/// Rising factorial a(a+1)...(a+n-1); 1 for n = 0. Negative-integer a gives
/// exact zeros once the factor a+k hits 0.
GaussRational pochhammer(const GaussRational& a, unsigned n);

/// Falling factorial c(c-1)...(c-k+1) for naturals; 0 when k > c.
Rational falling(unsigned c, unsigned k);

Rational factorial(unsigned n);

/// 0 when k > n.
Rational binomial(unsigned n, unsigned k);

/// Signed Stirling number of the first kind: coefficient of x^m in
/// x(x-1)...(x-n+1). Rows are memoized.
Rational stirling_first(unsigned n, unsigned m);

/// Whole row s(n, 0..n).
std::vector<Rational> stirling_first_row(unsigned n);

}  // namespace weylharm
