#include "weylharm/harmonic.hpp"

#include "weylharm/combinatorics.hpp"

namespace weylharm {

UniPoly module_inner_product(const BiPoly& p, const BiPoly& q) {
  return component_project(p * conjugate_full(q), 0);
}

GaussRational l2_disc_inner_product(const BiPoly& p, const BiPoly& q) {
  GaussRational out;
  const UniPoly radial = module_inner_product(p, q);
  for (const auto& [k, c] : radial.terms()) out += c / GaussRational(k + 1);
  return out;
}

std::map<std::pair<int, unsigned>, GaussRational> e_grading_decompose(const BiPoly& p) {
  // Rewrite each radial profile in powers of y = 1-x: x^k = sum_n C(k,n) (-y)^n.
  std::map<std::pair<int, unsigned>, GaussRational> out;
  for (const auto& [m, phi] : components(p)) {
    for (const auto& [k, c] : phi.terms()) {
      for (unsigned n = 0; n <= k; ++n) {
        const Rational b = binomial(k, n);
        auto [it, inserted] = out.try_emplace({m, n}, c * GaussRational(n % 2 ? -b : b));
        if (!inserted) it->second += c * GaussRational(n % 2 ? -b : b);
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace weylharm
