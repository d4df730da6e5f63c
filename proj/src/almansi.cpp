#include "weylharm/harmonic.hpp"

#include <algorithm>

#include "weylharm/combinatorics.hpp"
#include "weylharm/errors.hpp"

namespace weylharm {

unsigned polyharmonic_order(const BiPoly& p) {
  if (p.is_zero()) return 0;
  unsigned top = 0;
  for (const auto& [e, c] : p.terms()) top = std::max(top, std::min(e.z, e.zb));
  return top + 1;
}

BiPoly AlmansiDecomposition::reconstruct() const {
  BiPoly out;
  for (unsigned j = 0; j < layers.size(); ++j) out += one_minus_r2_pow(j) * layers[j];
  return out;
}

AlmansiDecomposition almansi_decompose(const BiPoly& p) {
  if (p.is_zero()) throw DomainError("Almansi decomposition of the zero polynomial");
  AlmansiDecomposition out;
  out.layers.resize(polyharmonic_order(p));
  // z^k zb^l = z^{k-l} (1 - (1-|z|^2))^l for k >= l, mirrored otherwise.
  for (const auto& [e, c] : p.terms()) {
    const unsigned l = std::min(e.z, e.zb);
    const BiExp rest{e.z - l, e.zb - l};
    for (unsigned i = 0; i <= l; ++i) {
      const Rational b = binomial(l, i);
      out.layers[i].add_term(rest, c * GaussRational(i % 2 ? -b : b));
    }
  }
  return out;
}

}  // namespace weylharm
