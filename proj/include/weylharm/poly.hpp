#pragma once

#include <compare>
#include <map>
#include <string>

#include "weylharm/linear_combination.hpp"

namespace weylharm {

/// Exponents of z^z * zb^zb. Ordered graded-lex by (z+zb, z), which is also
/// the printing order.
struct BiExp {
  unsigned z = 0;
  unsigned zb = 0;

  unsigned degree() const { return z + zb; }
  int component() const { return static_cast<int>(z) - static_cast<int>(zb); }

  friend bool operator==(const BiExp&, const BiExp&) = default;
  friend std::strong_ordering operator<=>(const BiExp& a, const BiExp& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.z <=> b.z;
  }
};

/// Polynomial in the commuting variables z, zb.
class BiPoly : public LinearCombination<BiPoly, BiExp> {
 public:
  BiPoly() = default;

  static BiPoly constant(const GaussRational& c) { return term({0, 0}, c); }
  static BiPoly monomial(unsigned z, unsigned zb, const GaussRational& c = GaussRational(1)) {
    return term({z, zb}, c);
  }

  /// Total degree; -1 for the zero polynomial.
  int degree() const;

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly& operator*=(const BiPoly& rhs) { return *this = *this * rhs; }
};

BiPoly pow(const BiPoly& p, unsigned n);

/// Polynomial in one variable x, identified with K[|z|^2].
class UniPoly : public LinearCombination<UniPoly, unsigned> {
 public:
  UniPoly() = default;

  static UniPoly constant(const GaussRational& c) { return term(0, c); }
  static UniPoly monomial(unsigned k, const GaussRational& c = GaussRational(1)) { return term(k, c); }

  int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
  GaussRational evaluate(const GaussRational& x) const;
  UniPoly derivative() const;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& rhs) { return *this = *this * rhs; }
};

UniPoly pow(const UniPoly& p, unsigned n);

/// z^z zb^zb t^t with t a formal unit standing in for e^{i theta}.
struct RotExp {
  unsigned z = 0;
  unsigned zb = 0;
  int t = 0;

  friend bool operator==(const RotExp&, const RotExp&) = default;
  friend auto operator<=>(const RotExp&, const RotExp&) = default;
};

class RotPoly : public LinearCombination<RotPoly, RotExp> {
 public:
  friend RotPoly operator*(const RotPoly& a, const RotPoly& b);
};

/// (i,j) -> (j,i), coefficients untouched.
BiPoly conjugate_swap(const BiPoly& p);
/// Exponent swap plus complex conjugation of every coefficient.
BiPoly conjugate_full(const BiPoly& p);

/// z^m for m >= 0, zb^|m| for m < 0.
BiPoly xi(int m);

/// phi with (part of p in component m) = phi(|z|^2) xi_m.
UniPoly component_project(const BiPoly& p, int m);
/// All nonzero components, keyed by m.
std::map<int, UniPoly> components(const BiPoly& p);
/// phi(|z|^2) xi_m as a BiPoly.
BiPoly from_component(const UniPoly& phi, int m);

/// x -> z*zb.
BiPoly substitute_radial(const UniPoly& f);

/// (1 - z*zb)^n.
BiPoly one_minus_r2_pow(unsigned n);

/// p(t z, t^-1 zb).
RotPoly rotate_formal(const BiPoly& p);
/// Sets t = 1.
BiPoly specialize_unit(const RotPoly& p);

}  // namespace weylharm
