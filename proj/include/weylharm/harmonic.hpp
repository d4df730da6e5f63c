#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "weylharm/weyl.hpp"

namespace weylharm {

/// Least n with dz^n dzb^n p = 0: 1 + max min(k, l) over monomials z^k zb^l,
/// and 0 for p = 0.
unsigned polyharmonic_order(const BiPoly& p);

struct AlmansiDecomposition {
  /// q_0..q_{n-1}, each harmonic, with p = sum_j (1-|z|^2)^j q_j.
  std::vector<BiPoly> layers;

  BiPoly reconstruct() const;
};

/// Throws DomainError for p = 0.
AlmansiDecomposition almansi_decompose(const BiPoly& p);

/// Terminating Gauss series F(a, b, c; x). Terminates when a or b is a
/// non-positive integer (the nearer one wins). Throws DomainError if neither
/// is, or if (c)_k vanishes before the series stops.
UniPoly hypergeom_poly(const GaussRational& a, const GaussRational& b, const GaussRational& c);

/// F(a, b, c; 1) = (c-b)_{-a} / (c)_{-a} for a a non-positive integer.
/// Throws DomainError otherwise or when (c)_{-a} = 0.
GaussRational chu_vandermonde(const GaussRational& a, const GaussRational& b, const GaussRational& c);

/// (1 - z zb) dz dzb + g1 z dz + g2 zb dzb - g1 g2.
WeylOp2 build_L_operator(const GaussRational& g1, const GaussRational& g2);

/// x(1-x) d^2 + (c - (a+b+1) x) d - a b.
WeylOp1 hypergeometric_operator(const GaussRational& a, const GaussRational& b, const GaussRational& c);

/// The hypergeometric operator that the L operator reduces to on component m:
/// parameters (-g1, m-g2, m+1) for m >= 0 and (-g2, |m|-g1, |m|+1) for m < 0.
WeylOp1 reduced_L_operator(const GaussRational& g1, const GaussRational& g2, int m);

struct GammaHarmonicCoefficients {
  GaussRational g1;
  GaussRational g2;
  std::map<int, GaussRational> c;
};

/// sum_m c_m F(-g1, m-g2, m+1; |z|^2) z^m over m >= 0, and the conjugate
/// family F(-g2, |m|-g1, |m|+1; |z|^2) zb^|m| over m < 0.
BiPoly gamma_harmonic_from_coeffs(const GammaHarmonicCoefficients& g);

/// Reads c_m off the holomorphic and antiholomorphic monomials. Throws
/// DomainError unless L_{g1,g2} p = 0 and the coefficients rebuild p.
GammaHarmonicCoefficients gamma_harmonic_to_coeffs(const BiPoly& p, const GaussRational& g1,
                                                   const GaussRational& g2);

/// t_j(m) for j = 0..g1: F(-g1, m-g2, m+1; x) = sum_j t_j(m) (1-x)^j.
std::vector<GaussRational> gamma_layer_weights(unsigned g1, const GaussRational& g2, int m);

/// h_0..h_{g1} holomorphic with sum_j (1-|z|^2)^j h_j = the reconstruction.
/// Requires g1 natural and c supported on m >= 1.
std::vector<BiPoly> gamma_layers(const GammaHarmonicCoefficients& g);

/// Checks L_{g1,g2} p = 0 (DomainError otherwise) and that dz^g dzb^g p = 0
/// with g = max(g1, g2) + 1; returns the exact polyharmonic order.
unsigned gamma_to_polyharmonic_bound(unsigned g1, unsigned g2, const BiPoly& p);

/// theta_{l,j} = (-n+l)_j (m-n+l)_j / ((m+1)_j j!).
Rational o_basis_theta(unsigned m, unsigned n, unsigned l, unsigned j);

struct OBasis {
  unsigned m = 0;
  unsigned n = 0;
  /// o_l = F(-n+l, m-n+l, m+1; x).
  std::vector<UniPoly> lower;
  /// O_l = (1-x)^l o_l, each of degree <= n.
  std::vector<UniPoly> polys;
};

/// Builds the basis and checks independence on the way: the coefficient of
/// (1-x)^l in O_l must be nonzero, which makes the family triangular in
/// powers of 1-x.
OBasis o_basis(unsigned m, unsigned n);

struct BasisChangeTable {
  unsigned m = 0;
  unsigned n = 0;
  /// t[l][k], with (1-x)^l = sum_k t[l][k] O_k.
  std::vector<std::vector<Rational>> t;

  friend bool operator==(const BasisChangeTable&, const BasisChangeTable&) = default;
};

/// Closed-form recursion for t[l][k].
BasisChangeTable basis_change_recursive(unsigned m, unsigned n);
/// The same table by solving the linear systems directly.
BasisChangeTable basis_change_solve(unsigned m, unsigned n);

struct CellularDecomposition {
  unsigned order = 0;
  /// (m, j) -> k_{m,j}; zero entries omitted.
  std::map<std::pair<int, unsigned>, GaussRational> coeffs;
  /// w_0..w_{order-1}.
  std::vector<BiPoly> layers;

  /// sum_j (1-|z|^2)^j w_j.
  BiPoly reconstruct() const;
};

/// p = sum_j (1-|z|^2)^j w_j with L_{n-1-j,n-1-j} w_j = 0. The order n is the
/// polyharmonic order of p unless a larger one is forced. Throws DomainError
/// for p = 0 or a forced order below the actual one.
CellularDecomposition cellular_decompose(const BiPoly& p, std::optional<unsigned> order = std::nullopt);

/// Builds the layers from a coefficient table: w_j = sum_m k_{m,j} o_j^{|m|,n-1} xi_m.
CellularDecomposition cellular_compose(unsigned order, const std::map<std::pair<int, unsigned>, GaussRational>& coeffs);

/// Component 0 of p * conj(q), with full conjugation.
UniPoly module_inner_product(const BiPoly& p, const BiPoly& q);

/// Disc integral of p * conj(q) against normalized area measure:
/// |z|^{2k} integrates to 1/(k+1).
GaussRational l2_disc_inner_product(const BiPoly& p, const BiPoly& q);

/// Coordinates of p in the basis e_{m,n} = (1-|z|^2)^n xi_m.
std::map<std::pair<int, unsigned>, GaussRational> e_grading_decompose(const BiPoly& p);

}  // namespace weylharm
