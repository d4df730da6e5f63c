#include "weylharm/harmonic.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylharm/combinatorics.hpp"
#include "weylharm/errors.hpp"

namespace weylharm {

namespace {

UniPoly radial_profile(const GaussRational& g1, const GaussRational& g2, int m) {
  const GaussRational am(std::abs(m));
  const GaussRational c = am + GaussRational(1);
  if (m >= 0) return hypergeom_poly(-g1, am - g2, c);
  return hypergeom_poly(-g2, am - g1, c);
}

unsigned as_natural(const GaussRational& g, const char* what) {
  if (!g.is_integer() || g.re().sign() < 0) throw DomainError(std::string(what) + " must be a natural number");
  return static_cast<unsigned>(g.re().numerator().get_ui());
}

}  // namespace

BiPoly gamma_harmonic_from_coeffs(const GammaHarmonicCoefficients& g) {
  BiPoly out;
  for (const auto& [m, c] : g.c) {
    if (c.is_zero()) continue;
    UniPoly phi = radial_profile(g.g1, g.g2, m);
    out += from_component(phi.scale(c), m);
  }
  return out;
}

GammaHarmonicCoefficients gamma_harmonic_to_coeffs(const BiPoly& p, const GaussRational& g1,
                                                   const GaussRational& g2) {
  if (!weyl2_apply(build_L_operator(g1, g2), p).is_zero())
    throw DomainError("polynomial is not annihilated by L(" + g1.to_string() + ", " + g2.to_string() + ")");
  GammaHarmonicCoefficients out{g1, g2, {}};
  // c_m = dz^m p(0) / m! is the coefficient of z^m; likewise zb^|m| for m < 0.
  for (const auto& [e, c] : p.terms()) {
    if (e.zb == 0) out.c[static_cast<int>(e.z)] = c;
    else if (e.z == 0) out.c[-static_cast<int>(e.zb)] = c;
  }
  if (gamma_harmonic_from_coeffs(out) != p)
    throw DomainError("kernel element is not spanned by the terminating hypergeometric family");
  return out;
}

std::vector<GaussRational> gamma_layer_weights(unsigned g1, const GaussRational& g2, int m) {
  // F = sum_k theta_k x^k and x^k = sum_j C(k,j) (-(1-x))^j.
  const GaussRational a(-static_cast<long>(g1));
  const GaussRational b = GaussRational(m) - g2;
  const GaussRational c(m + 1);
  std::vector<GaussRational> theta(g1 + 1);
  for (unsigned k = 0; k <= g1; ++k) {
    const GaussRational den = pochhammer(c, k) * GaussRational(factorial(k));
    theta[k] = pochhammer(a, k) * pochhammer(b, k) / den;
  }
  std::vector<GaussRational> t(g1 + 1);
  for (unsigned j = 0; j <= g1; ++j) {
    GaussRational acc;
    for (unsigned k = j; k <= g1; ++k) acc += theta[k] * GaussRational(binomial(k, j));
    t[j] = j % 2 ? -acc : acc;
  }
  return t;
}

std::vector<BiPoly> gamma_layers(const GammaHarmonicCoefficients& g) {
  const unsigned g1 = as_natural(g.g1, "gamma_1");
  std::vector<BiPoly> layers(g1 + 1);
  for (const auto& [m, c] : g.c) {
    if (c.is_zero()) continue;
    if (m < 1) throw DomainError("layer split needs coefficients supported on m >= 1");
    const auto t = gamma_layer_weights(g1, g.g2, m);
    for (unsigned j = 0; j <= g1; ++j) layers[j].add_term({static_cast<unsigned>(m), 0}, c * t[j]);
  }
  return layers;
}

unsigned gamma_to_polyharmonic_bound(unsigned g1, unsigned g2, const BiPoly& p) {
  if (!weyl2_apply(build_L_operator(g1, g2), p).is_zero())
    throw DomainError("polynomial is not annihilated by L(" + std::to_string(g1) + ", " + std::to_string(g2) + ")");
  const unsigned g = std::max(g1, g2) + 1;
  if (!weyl2_apply(WeylOp2::monomial(0, 0, g, g), p).is_zero())
    throw std::logic_error("kernel element exceeds the polyharmonic order bound");
  return polyharmonic_order(p);
}

}  // namespace weylharm
