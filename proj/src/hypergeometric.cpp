#include "weylharm/harmonic.hpp"

#include <cstdlib>
#include <optional>

#include "weylharm/combinatorics.hpp"
#include "weylharm/errors.hpp"
#include "weylharm/linalg.hpp"

namespace weylharm {

namespace {

// -v for a non-positive integer v, nullopt otherwise.
std::optional<unsigned> termination_index(const GaussRational& v) {
  if (!v.is_nonpositive_integer()) return std::nullopt;
  return static_cast<unsigned>(mpz_class(-v.re().numerator()).get_ui());
}

}  // namespace

UniPoly hypergeom_poly(const GaussRational& a, const GaussRational& b, const GaussRational& c) {
  auto na = termination_index(a);
  auto nb = termination_index(b);
  if (!na && !nb) throw DomainError("hypergeometric series does not terminate: " + a.to_string() + ", " + b.to_string());
  const unsigned stop = na && nb ? std::min(*na, *nb) : (na ? *na : *nb);
  UniPoly out = UniPoly::constant(1);
  GaussRational term(1);
  for (unsigned k = 0; k < stop; ++k) {
    const GaussRational den = c + GaussRational(k);
    if (den.is_zero()) throw DomainError("hypergeometric denominator vanishes at c = " + c.to_string());
    term *= (a + GaussRational(k)) * (b + GaussRational(k));
    term /= den * GaussRational(k + 1);
    out.add_term(k + 1, term);
  }
  return out;
}

GaussRational chu_vandermonde(const GaussRational& a, const GaussRational& b, const GaussRational& c) {
  auto n = termination_index(a);
  if (!n) throw DomainError("closed form needs a non-positive integer a, got " + a.to_string());
  const GaussRational den = pochhammer(c, *n);
  if (den.is_zero()) throw DomainError("(c)_n vanishes for c = " + c.to_string());
  return pochhammer(c - b, *n) / den;
}

WeylOp2 build_L_operator(const GaussRational& g1, const GaussRational& g2) {
  WeylOp2 out = WeylOp2::monomial(0, 0, 1, 1) - WeylOp2::monomial(1, 1, 1, 1);
  out += WeylOp2::monomial(1, 0, 1, 0, g1);
  out += WeylOp2::monomial(0, 1, 0, 1, g2);
  out -= WeylOp2::scalar(g1 * g2);
  return out;
}

WeylOp1 hypergeometric_operator(const GaussRational& a, const GaussRational& b, const GaussRational& c) {
  WeylOp1 out = WeylOp1::monomial(1, 2) - WeylOp1::monomial(2, 2);
  out += WeylOp1::monomial(0, 1, c);
  out -= WeylOp1::monomial(1, 1, a + b + GaussRational(1));
  out -= WeylOp1::scalar(a * b);
  return out;
}

WeylOp1 reduced_L_operator(const GaussRational& g1, const GaussRational& g2, int m) {
  const GaussRational am(std::abs(m));
  if (m >= 0) return hypergeometric_operator(-g1, am - g2, am + GaussRational(1));
  return hypergeometric_operator(-g2, am - g1, am + GaussRational(1));
}

Rational o_basis_theta(unsigned m, unsigned n, unsigned l, unsigned j) {
  const GaussRational a = GaussRational(static_cast<long>(l) - static_cast<long>(n));
  const GaussRational b = GaussRational(static_cast<long>(m) + static_cast<long>(l) - static_cast<long>(n));
  const GaussRational v = pochhammer(a, j) * pochhammer(b, j) / (pochhammer(GaussRational(m + 1), j) * GaussRational(factorial(j)));
  return v.re();
}

namespace {

UniPoly one_minus_x_pow(unsigned l) { return pow(UniPoly::constant(1) - UniPoly::monomial(1), l); }

// Coefficient of (1-x)^k in O_j.
Rational s_entry(unsigned m, unsigned n, unsigned j, unsigned k) {
  Rational sum;
  for (unsigned i = 0; i + k <= n; ++i) sum += binomial(k - j + i, k - j) * o_basis_theta(m, n, j, k - j + i);
  return (k - j) % 2 ? -sum : sum;
}

// (m+1)_{n-k} / (n+1-k)_{n-k}, the reciprocal of the diagonal entry s_entry(k, k).
Rational diagonal_inverse(unsigned m, unsigned n, unsigned k) {
  return (pochhammer(GaussRational(m + 1), n - k) / pochhammer(GaussRational(n + 1 - k), n - k)).re();
}

}  // namespace

OBasis o_basis(unsigned m, unsigned n) {
  OBasis out{m, n, {}, {}};
  for (unsigned l = 0; l <= n; ++l) {
    const GaussRational a(static_cast<long>(l) - static_cast<long>(n));
    const GaussRational b(static_cast<long>(m) + static_cast<long>(l) - static_cast<long>(n));
    UniPoly o = hypergeom_poly(a, b, GaussRational(m + 1));
    if (s_entry(m, n, l, l).is_zero()) throw std::logic_error("O-basis lost independence at l = " + std::to_string(l));
    out.polys.push_back(one_minus_x_pow(l) * o);
    out.lower.push_back(std::move(o));
  }
  return out;
}

BasisChangeTable basis_change_recursive(unsigned m, unsigned n) {
  BasisChangeTable out{m, n, std::vector<std::vector<Rational>>(n + 1, std::vector<Rational>(n + 1))};
  std::vector<std::vector<Rational>> s(n + 1, std::vector<Rational>(n + 1));
  for (unsigned j = 0; j <= n; ++j)
    for (unsigned k = j + 1; k <= n; ++k) s[j][k] = s_entry(m, n, j, k);
  for (unsigned l = 0; l <= n; ++l) {
    auto& row = out.t[l];
    row[l] = diagonal_inverse(m, n, l);
    for (unsigned k = l + 1; k <= n; ++k) {
      Rational acc;
      for (unsigned j = l; j < k; ++j) acc += row[j] * s[j][k];
      row[k] = -diagonal_inverse(m, n, k) * acc;
    }
  }
  return out;
}

BasisChangeTable basis_change_solve(unsigned m, unsigned n) {
  const OBasis basis = o_basis(m, n);
  Matrix a(n + 1, n + 1);
  for (unsigned k = 0; k <= n; ++k)
    for (const auto& [i, c] : basis.polys[k].terms()) a(i, k) = c;
  BasisChangeTable out{m, n, std::vector<std::vector<Rational>>(n + 1, std::vector<Rational>(n + 1))};
  for (unsigned l = 0; l <= n; ++l) {
    std::vector<GaussRational> rhs(n + 1);
    const UniPoly target = one_minus_x_pow(l);
    for (const auto& [i, c] : target.terms()) rhs[i] = c;
    auto x = solve(a, rhs);
    if (!x) throw std::logic_error("O-basis does not span");
    for (unsigned k = 0; k <= n; ++k) out.t[l][k] = (*x)[k].re();
  }
  return out;
}

}  // namespace weylharm
