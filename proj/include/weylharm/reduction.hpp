#pragma once

#include <vector>

#include "weylharm/invariance.hpp"

namespace weylharm {

/// Multiplication by x^a.
WeylOp1 radial_factor_op(unsigned a);
/// Image of z^a dz^a on component m (|m| used): sum_l C(a,l) (|m|-l+1)_l x^{a-l} d^{a-l}.
WeylOp1 euler_same_side_op(unsigned a, int m);
/// Image of zb^a dzb^a on component m >= 0: x^a d^a.
WeylOp1 euler_other_side_op(unsigned a);
/// Image of (dz dzb)^a: sum_l C(a,l) (|m|+a)!/(|m|+a-l)! x^{a-l} d^{2a-l}.
WeylOp1 laplace_power_op(unsigned a, int m);

/// The ordinary differential operator T with D(p(|z|^2) xi_m) = xi_m (T p)(|z|^2).
/// Built by factoring each term and composing the four one-variable images.
/// Throws DomainError for non-invariant d.
WeylOp1 lambda_m(const WeylOp2& d, int m);

/// z dz - zb dzb.
WeylOp2 angular_derivative();

/// prod_{k != pick} (A - k)/(pick - k) over k in s. Throws DomainError on
/// repeated entries or a pick outside s.
WeylOp2 projector_as_operator(const std::vector<int>& s, int pick);

/// D(p(|z|^2) xi_m) == xi_m (lambda_m(D, m) p)(|z|^2).
bool verify_intertwining(const WeylOp2& d, int m, const UniPoly& p);

/// Monomials of total degree <= n in BiExp order.
std::vector<BiExp> monomials_up_to(unsigned n);

/// Basis of {p : deg p <= max_degree, D p = 0}. Standard nullspace basis over
/// the monomials in BiExp order, so the output is deterministic.
std::vector<BiPoly> kernel_bounded(const WeylOp2& d, unsigned max_degree);

/// Basis of {f : deg f <= max_degree, T f = 0}.
std::vector<UniPoly> component_kernel_bounded(const WeylOp1& t, unsigned max_degree);

}  // namespace weylharm
