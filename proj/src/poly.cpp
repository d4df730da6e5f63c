#include "weylharm/poly.hpp"

#include <algorithm>
#include <cstdlib>

#include "weylharm/combinatorics.hpp"

namespace weylharm {

int BiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.degree()));
  return d;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term({ea.z + eb.z, ea.zb + eb.zb}, ca * cb);
  return out;
}

BiPoly pow(const BiPoly& p, unsigned n) {
  BiPoly out = BiPoly::constant(1);
  BiPoly base = p;
  while (n > 0) {
    if (n & 1u) out *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return out;
}

GaussRational UniPoly::evaluate(const GaussRational& x) const {
  // Horner over the sparse exponents, highest first.
  GaussRational acc;
  unsigned prev = 0;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first)
      for (unsigned k = it->first; k < prev; ++k) acc *= x;
    acc += it->second;
    prev = it->first;
    first = false;
  }
  for (unsigned k = 0; k < prev; ++k) acc *= x;
  return acc;
}

UniPoly UniPoly::derivative() const {
  UniPoly out;
  for (const auto& [k, c] : terms_)
    if (k > 0) out.add_term(k - 1, c * GaussRational(k));
  return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) out.add_term(ka + kb, ca * cb);
  return out;
}

UniPoly pow(const UniPoly& p, unsigned n) {
  UniPoly out = UniPoly::constant(1);
  for (unsigned k = 0; k < n; ++k) out *= p;
  return out;
}

RotPoly operator*(const RotPoly& a, const RotPoly& b) {
  RotPoly out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term({ea.z + eb.z, ea.zb + eb.zb, ea.t + eb.t}, ca * cb);
  return out;
}

BiPoly conjugate_swap(const BiPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e.zb, e.z}, c);
  return out;
}

BiPoly conjugate_full(const BiPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e.zb, e.z}, c.conj());
  return out;
}

BiPoly xi(int m) {
  const unsigned a = static_cast<unsigned>(std::abs(m));
  return m >= 0 ? BiPoly::monomial(a, 0) : BiPoly::monomial(0, a);
}

UniPoly component_project(const BiPoly& p, int m) {
  UniPoly out;
  for (const auto& [e, c] : p.terms())
    if (e.component() == m) out.add_term(std::min(e.z, e.zb), c);
  return out;
}

std::map<int, UniPoly> components(const BiPoly& p) {
  std::map<int, UniPoly> out;
  for (const auto& [e, c] : p.terms()) out[e.component()].add_term(std::min(e.z, e.zb), c);
  return out;
}

BiPoly from_component(const UniPoly& phi, int m) {
  const unsigned a = static_cast<unsigned>(std::abs(m));
  BiPoly out;
  for (const auto& [k, c] : phi.terms()) out.add_term(m >= 0 ? BiExp{k + a, k} : BiExp{k, k + a}, c);
  return out;
}

BiPoly substitute_radial(const UniPoly& f) { return from_component(f, 0); }

BiPoly one_minus_r2_pow(unsigned n) {
  BiPoly out;
  for (unsigned j = 0; j <= n; ++j) {
    Rational c = binomial(n, j);
    out.add_term({j, j}, j % 2 ? -c : c);
  }
  return out;
}

RotPoly rotate_formal(const BiPoly& p) {
  RotPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e.z, e.zb, e.component()}, c);
  return out;
}

BiPoly specialize_unit(const RotPoly& p) {
  BiPoly out;
  for (const auto& [e, c] : p.terms()) out.add_term({e.z, e.zb}, c);
  return out;
}

}  // namespace weylharm
