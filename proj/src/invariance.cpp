#include "weylharm/invariance.hpp"

#include <map>

#include "weylharm/combinatorics.hpp"
#include "weylharm/errors.hpp"
#include "weylharm/format.hpp"

namespace weylharm {

bool is_rotation_invariant(const WeylOp2& d) {
  for (const auto& [e, c] : d.terms())
    if (!e.rotation_invariant()) return false;
  return true;
}

RotPoly apply_rot(const WeylOp2& d, const RotPoly& p) {
  // Group by t exponent, apply to each slice as a BiPoly, reattach t.
  std::map<int, BiPoly> slices;
  for (const auto& [e, c] : p.terms()) slices[e.t].add_term({e.z, e.zb}, c);
  RotPoly out;
  for (const auto& [t, slice] : slices) {
    const BiPoly image = weyl2_apply(d, slice);
    for (const auto& [e, c] : image.terms()) out.add_term({e.z, e.zb, t}, c);
  }
  return out;
}

bool commutes_with_formal_rotation(const WeylOp2& d, const BiPoly& p) {
  return apply_rot(d, rotate_formal(p)) == rotate_formal(weyl2_apply(d, p));
}

WeylOp2 GeneratorWord::expand() const {
  WeylOp2 out = WeylOp2::multiplication(BiPoly::monomial(radial, radial));
  out = out * WeylOp2::monomial(euler_z, 0, euler_z, 0);
  out = out * WeylOp2::monomial(0, euler_zb, 0, euler_zb);
  out = out * WeylOp2::monomial(0, 0, laplace, laplace);
  return out;
}

std::string GeneratorWord::to_string() const {
  return "R^" + std::to_string(radial) + " * Ez^" + std::to_string(euler_z) + " * Ebz^" +
         std::to_string(euler_zb) + " * L^" + std::to_string(laplace);
}

GeneratorWord factor_invariant_basis_element(const WeylExp& e) {
  if (!e.rotation_invariant()) throw DomainError("monomial is not rotation invariant");
  if (e.z <= e.dz) return {0, e.z, e.zb, e.dz - e.z};
  if (e.z <= e.zb) return {e.z, 0, e.zb - e.z, e.dz};
  return {e.zb, e.z - e.zb, 0, e.dzb};
}

std::vector<Rational> euler_power_expand(unsigned n) { return stirling_first_row(n); }

WeylOp2 GeneratorExpr::evaluate() const {
  const WeylOp2 gens[4] = {
      WeylOp2::monomial(1, 1, 0, 0),
      WeylOp2::monomial(1, 0, 1, 0),
      WeylOp2::monomial(0, 1, 0, 1),
      WeylOp2::monomial(0, 0, 1, 1),
  };
  WeylOp2 out;
  for (const auto& [k, c] : terms_) {
    WeylOp2 w = WeylOp2::scalar(c);
    const unsigned exps[4] = {k.r, k.e, k.eb, k.l};
    for (int g = 0; g < 4; ++g)
      for (unsigned i = 0; i < exps[g]; ++i) w = w * gens[g];
    out += w;
  }
  return out;
}

std::string GeneratorExpr::to_string() const {
  static constexpr const char* names[4] = {"(z*zb)", "(z*dz)", "(zb*dzb)", "(dz*dzb)"};
  std::vector<std::pair<GaussRational, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const unsigned exps[4] = {it->first.r, it->first.e, it->first.eb, it->first.l};
    std::string mono;
    for (int g = 0; g < 4; ++g) {
      if (exps[g] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[g];
      if (exps[g] > 1) mono += '^' + std::to_string(exps[g]);
    }
    parts.emplace_back(it->second, mono);
  }
  return format_sum(parts);
}

GeneratorExpr rewrite_in_generators(const WeylOp2& d) {
  if (!is_rotation_invariant(d)) throw DomainError("operator is not rotation invariant");
  GeneratorExpr out;
  for (const auto& [e, c] : d.terms()) {
    const GeneratorWord w = factor_invariant_basis_element(e);
    const auto sz = euler_power_expand(w.euler_z);
    const auto szb = euler_power_expand(w.euler_zb);
    for (unsigned m = 0; m < sz.size(); ++m) {
      if (sz[m].is_zero()) continue;
      for (unsigned k = 0; k < szb.size(); ++k) {
        if (szb[k].is_zero()) continue;
        out.add_term({w.radial, m, k, w.laplace}, c * GaussRational(sz[m] * szb[k]));
      }
    }
  }
  return out;
}

}  // namespace weylharm
