#pragma once

#include <compare>
#include <string>
#include <vector>

#include "weylharm/weyl.hpp"

namespace weylharm {

/// True iff every canonical term has z - dz == zb - dzb.
bool is_rotation_invariant(const WeylOp2& d);

/// D applied to a RotPoly with t held constant.
RotPoly apply_rot(const WeylOp2& d, const RotPoly& p);

/// D(p(tz, zb/t)) == (Dp)(tz, zb/t) as Laurent polynomials in t.
bool commutes_with_formal_rotation(const WeylOp2& d, const BiPoly& p);

/// (z zb)^radial * z^ez dz^ez * zb^ebz dzb^ebz * (dz dzb)^laplace, in this order.
struct GeneratorWord {
  unsigned radial = 0;
  unsigned euler_z = 0;
  unsigned euler_zb = 0;
  unsigned laplace = 0;

  /// Multiplies the factors out in A2.
  WeylOp2 expand() const;
  /// `R^a * Ez^b * Ebz^c * L^d`.
  std::string to_string() const;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Factors an invariant canonical monomial. Branches, tried in order:
/// z <= dz, z <= zb, otherwise. Throws DomainError for non-invariant exponents.
GeneratorWord factor_invariant_basis_element(const WeylExp& e);

/// Coefficients c_0..c_n with z^n dz^n = sum_m c_m (z dz)^m.
std::vector<Rational> euler_power_expand(unsigned n);

/// (z zb)^r (z dz)^e (zb dzb)^eb (dz dzb)^l. Ordered by total degree, then lex.
struct GeneratorMonomial {
  unsigned r = 0;
  unsigned e = 0;
  unsigned eb = 0;
  unsigned l = 0;

  unsigned degree() const { return r + e + eb + l; }

  friend bool operator==(const GeneratorMonomial&, const GeneratorMonomial&) = default;
  friend std::strong_ordering operator<=>(const GeneratorMonomial& a, const GeneratorMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.r <=> b.r; c != 0) return c;
    if (auto c = a.e <=> b.e; c != 0) return c;
    if (auto c = a.eb <=> b.eb; c != 0) return c;
    return a.l <=> b.l;
  }
};

/// Linear combination of ordered products of the four generators.
class GeneratorExpr : public LinearCombination<GeneratorExpr, GeneratorMonomial> {
 public:
  /// Evaluates every product in A2.
  WeylOp2 evaluate() const;
  /// Highest degree first, e.g. `(z*dz)^2 - (z*dz)`; parses back as an operator.
  std::string to_string() const;
};

/// Throws DomainError for non-invariant d.
GeneratorExpr rewrite_in_generators(const WeylOp2& d);

}  // namespace weylharm
