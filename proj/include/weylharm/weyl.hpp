#pragma once

#include <compare>

#include "weylharm/poly.hpp"

namespace weylharm {

/// Canonical monomial z^z zb^zb dz^dz dzb^dzb. Ordered by
/// (dz+dzb, dz, z+zb, z), the printing order.
struct WeylExp {
  unsigned z = 0;
  unsigned zb = 0;
  unsigned dz = 0;
  unsigned dzb = 0;

  unsigned order() const { return dz + dzb; }
  /// z - dz == zb - dzb.
  bool rotation_invariant() const {
    return static_cast<long>(z) - static_cast<long>(dz) == static_cast<long>(zb) - static_cast<long>(dzb);
  }

  friend bool operator==(const WeylExp&, const WeylExp&) = default;
  friend std::strong_ordering operator<=>(const WeylExp& a, const WeylExp& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    if (auto c = a.dz <=> b.dz; c != 0) return c;
    if (auto c = a.z + a.zb <=> b.z + b.zb; c != 0) return c;
    return a.z <=> b.z;
  }
};

/// Element of the second Weyl algebra in canonical (normally ordered) form.
class WeylOp2 : public LinearCombination<WeylOp2, WeylExp> {
 public:
  WeylOp2() = default;

  static WeylOp2 scalar(const GaussRational& c) { return term({}, c); }
  static WeylOp2 monomial(unsigned z, unsigned zb, unsigned dz, unsigned dzb,
                          const GaussRational& c = GaussRational(1)) {
    return term({z, zb, dz, dzb}, c);
  }
  static WeylOp2 gen_z() { return monomial(1, 0, 0, 0); }
  static WeylOp2 gen_zb() { return monomial(0, 1, 0, 0); }
  static WeylOp2 gen_dz() { return monomial(0, 0, 1, 0); }
  static WeylOp2 gen_dzb() { return monomial(0, 0, 0, 1); }
  /// Multiplication by p.
  static WeylOp2 multiplication(const BiPoly& p);

  /// max(dz+dzb) over terms; 0 for the zero operator.
  unsigned order() const;

  friend WeylOp2 operator*(const WeylOp2& a, const WeylOp2& b);
  WeylOp2& operator*=(const WeylOp2& rhs) { return *this = *this * rhs; }
};

WeylOp2 pow(const WeylOp2& d, unsigned n);

/// Canonical form of the composition d1 o d2.
WeylOp2 weyl2_multiply(const WeylOp2& d1, const WeylOp2& d2);
BiPoly weyl2_apply(const WeylOp2& d, const BiPoly& p);
WeylOp2 weyl2_commutator(const WeylOp2& d1, const WeylOp2& d2);
/// Swaps z<->zb and dz<->dzb termwise, coefficients untouched.
WeylOp2 weyl2_conjugate(const WeylOp2& d);

/// x^x d^d with d = d/dx. Ordered by (d, x); printed highest first.
struct Weyl1Exp {
  unsigned x = 0;
  unsigned d = 0;

  friend bool operator==(const Weyl1Exp&, const Weyl1Exp&) = default;
  friend std::strong_ordering operator<=>(const Weyl1Exp& a, const Weyl1Exp& b) {
    if (auto c = a.d <=> b.d; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// Element of the first Weyl algebra, canonical form x^a (d/dx)^b.
class WeylOp1 : public LinearCombination<WeylOp1, Weyl1Exp> {
 public:
  WeylOp1() = default;

  static WeylOp1 scalar(const GaussRational& c) { return term({}, c); }
  static WeylOp1 monomial(unsigned x, unsigned d, const GaussRational& c = GaussRational(1)) {
    return term({x, d}, c);
  }
  static WeylOp1 multiplication(const UniPoly& f);

  unsigned order() const;

  friend WeylOp1 operator*(const WeylOp1& a, const WeylOp1& b);
  WeylOp1& operator*=(const WeylOp1& rhs) { return *this = *this * rhs; }
};

UniPoly weyl1_apply(const WeylOp1& t, const UniPoly& f);

}  // namespace weylharm
