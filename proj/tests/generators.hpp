#pragma once

// Seeded random values for property tests.

#include <cstdint>
#include <random>

#include "weylharm/harmonic.hpp"
#include "weylharm/reduction.hpp"

namespace weylharm::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int span = 9, int max_den = 6) {
  return Rational(mpz_class(uniform(rng, -span, span)), mpz_class(uniform(rng, 1, max_den)));
}

/// Nonzero Gaussian rational; real about half the time.
inline GaussRational random_scalar(Rng& rng) {
  for (;;) {
    GaussRational c(random_rational(rng), uniform(rng, 0, 1) ? random_rational(rng) : Rational(0));
    if (!c.is_zero()) return c;
  }
}

inline BiPoly random_bipoly(Rng& rng, unsigned max_degree, int max_terms) {
  BiPoly p;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) {
    const unsigned deg = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree)));
    const unsigned z = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(deg)));
    p.add_term({z, deg - z}, random_scalar(rng));
  }
  return p;
}

inline UniPoly random_unipoly(Rng& rng, unsigned max_degree, int max_terms) {
  UniPoly p;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) p.add_term(static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree))), random_scalar(rng));
  return p;
}

/// Operator with at most max_terms canonical terms, each of order <= max_order
/// and multiplier degree <= max_mult.
inline WeylOp2 random_op(Rng& rng, unsigned max_order, unsigned max_mult, int max_terms) {
  WeylOp2 d;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) {
    const unsigned ord = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_order)));
    const unsigned dz = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(ord)));
    const unsigned mult = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_mult)));
    const unsigned z = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(mult)));
    d.add_term({z, mult - z, dz, ord - dz}, random_scalar(rng));
  }
  return d;
}

/// Invariant operator: each term has z - dz == zb - dzb.
inline WeylOp2 random_invariant_op(Rng& rng, unsigned max_order, int max_terms) {
  WeylOp2 d;
  const int n = uniform(rng, 1, max_terms);
  for (int k = 0; k < n; ++k) {
    const unsigned ord = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_order)));
    const unsigned dz = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(ord)));
    const unsigned dzb = ord - dz;
    // z = dz + s, zb = dzb + s for a shift s >= -min(dz, dzb).
    const int s = uniform(rng, -static_cast<int>(std::min(dz, dzb)), 2);
    d.add_term({static_cast<unsigned>(static_cast<int>(dz) + s), static_cast<unsigned>(static_cast<int>(dzb) + s), dz, dzb},
               random_scalar(rng));
  }
  return d;
}

/// Polyharmonic polynomial of order exactly n (n >= 1): every monomial has
/// min(k,l) < n, and at least one has min(k,l) = n-1.
inline BiPoly random_polyharmonic(Rng& rng, unsigned n, unsigned max_degree, int max_terms) {
  for (;;) {
    BiPoly p;
    const unsigned l = n - 1;
    if (2 * l > max_degree) return p;
    // Anchor monomial with min = n-1.
    const unsigned extra = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree - 2 * l)));
    p.add_term(uniform(rng, 0, 1) ? BiExp{l + extra, l} : BiExp{l, l + extra}, random_scalar(rng));
    const int terms = uniform(rng, 0, max_terms - 1);
    for (int k = 0; k < terms; ++k) {
      const unsigned lo = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(l)));
      const unsigned hi_max = max_degree - lo;
      const unsigned hi = static_cast<unsigned>(uniform(rng, static_cast<int>(lo), static_cast<int>(hi_max)));
      p.add_term(uniform(rng, 0, 1) ? BiExp{hi, lo} : BiExp{lo, hi}, random_scalar(rng));
    }
    if (polyharmonic_order(p) == n) return p;
  }
}

/// Random coefficient table for a cellular synthesis of order n whose result
/// has degree <= max_degree: component m in layer j contributes degree at
/// most |m| + 2(n-1).
inline std::map<std::pair<int, unsigned>, GaussRational> random_cellular_coeffs(Rng& rng, unsigned n,
                                                                                unsigned max_degree, int max_entries) {
  std::map<std::pair<int, unsigned>, GaussRational> k;
  const int mmax = static_cast<int>(max_degree) - 2 * static_cast<int>(n - 1);
  const int entries = uniform(rng, 1, max_entries);
  for (int e = 0; e < entries; ++e) {
    const int m = uniform(rng, -mmax, mmax);
    const unsigned j = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(n) - 1));
    k[{m, j}] = random_scalar(rng);
  }
  // Make sure the top layer is populated so the order is exactly n.
  k[{uniform(rng, -mmax, mmax), n - 1}] = random_scalar(rng);
  return k;
}

}  // namespace weylharm::testing
