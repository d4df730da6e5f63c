#include "weylharm/harmonic.hpp"

#include <cstdlib>

#include "weylharm/errors.hpp"

namespace weylharm {

BiPoly CellularDecomposition::reconstruct() const {
  BiPoly out;
  for (unsigned j = 0; j < layers.size(); ++j) out += one_minus_r2_pow(j) * layers[j];
  return out;
}

CellularDecomposition cellular_compose(unsigned order,
                                       const std::map<std::pair<int, unsigned>, GaussRational>& coeffs) {
  if (order == 0) throw DomainError("cellular decomposition needs order >= 1");
  CellularDecomposition out;
  out.order = order;
  out.layers.resize(order);
  std::map<unsigned, OBasis> bases;
  for (const auto& [key, k] : coeffs) {
    const auto [m, j] = key;
    if (j >= order) throw DomainError("layer index " + std::to_string(j) + " out of range");
    if (k.is_zero()) continue;
    const unsigned am = static_cast<unsigned>(std::abs(m));
    auto it = bases.find(am);
    if (it == bases.end()) it = bases.emplace(am, o_basis(am, order - 1)).first;
    UniPoly phi = it->second.lower[j];
    out.layers[j] += from_component(phi.scale(k), m);
    out.coeffs[key] = k;
  }
  return out;
}

CellularDecomposition cellular_decompose(const BiPoly& p, std::optional<unsigned> order) {
  if (p.is_zero()) throw DomainError("cellular decomposition of the zero polynomial");
  const unsigned actual = polyharmonic_order(p);
  const unsigned n = order.value_or(actual);
  if (n < actual)
    throw DomainError("requested order " + std::to_string(n) + " is below the polyharmonic order " +
                      std::to_string(actual));
  const AlmansiDecomposition alm = almansi_decompose(p);

  // c[m][j]: the harmonic layer q_j restricted to component m is c xi_m.
  std::map<int, std::vector<GaussRational>> c;
  for (unsigned j = 0; j < alm.layers.size(); ++j)
    for (const auto& [m, phi] : components(alm.layers[j])) {
      auto& row = c[m];
      row.resize(n);
      row[j] = phi.coeff(0);
    }

  // (1-x)^j = sum_i t_{j,i} O_i, so sum_j c_j (1-x)^j = sum_i k_i O_i.
  std::map<std::pair<int, unsigned>, GaussRational> k;
  std::map<unsigned, BasisChangeTable> tables;
  for (const auto& [m, row] : c) {
    const unsigned am = static_cast<unsigned>(std::abs(m));
    auto it = tables.find(am);
    if (it == tables.end()) it = tables.emplace(am, basis_change_recursive(am, n - 1)).first;
    const auto& t = it->second.t;
    for (unsigned i = 0; i < n; ++i) {
      GaussRational acc;
      for (unsigned j = 0; j <= i; ++j)
        if (!row[j].is_zero()) acc += row[j] * GaussRational(t[j][i]);
      if (!acc.is_zero()) k[{m, i}] = acc;
    }
  }
  return cellular_compose(n, k);
}

}  // namespace weylharm
