#include "weylharm/reduction.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "weylharm/combinatorics.hpp"
#include "weylharm/errors.hpp"
#include "weylharm/linalg.hpp"

namespace weylharm {

WeylOp1 radial_factor_op(unsigned a) { return WeylOp1::monomial(a, 0); }

WeylOp1 euler_same_side_op(unsigned a, int m) {
  const unsigned am = static_cast<unsigned>(std::abs(m));
  WeylOp1 out;
  for (unsigned l = 0; l <= a; ++l) {
    const GaussRational rise = pochhammer(GaussRational(static_cast<long>(am) - static_cast<long>(l) + 1), l);
    out.add_term({a - l, a - l}, GaussRational(binomial(a, l)) * rise);
  }
  return out;
}

WeylOp1 euler_other_side_op(unsigned a) { return WeylOp1::monomial(a, a); }

WeylOp1 laplace_power_op(unsigned a, int m) {
  const unsigned am = static_cast<unsigned>(std::abs(m));
  WeylOp1 out;
  for (unsigned l = 0; l <= a; ++l)
    out.add_term({a - l, 2 * a - l}, GaussRational(binomial(a, l) * falling(am + a, l)));
  return out;
}

WeylOp1 lambda_m(const WeylOp2& d, int m) {
  if (!is_rotation_invariant(d)) throw DomainError("operator is not rotation invariant");
  // Words repeat across terms more often than not; build each image once.
  std::map<std::tuple<unsigned, unsigned, unsigned, unsigned>, WeylOp1> images;
  WeylOp1 out;
  for (const auto& [e, c] : d.terms()) {
    const GeneratorWord w = factor_invariant_basis_element(e);
    // On negative components the two Euler factors trade places.
    const unsigned same = m >= 0 ? w.euler_z : w.euler_zb;
    const unsigned other = m >= 0 ? w.euler_zb : w.euler_z;
    const auto key = std::make_tuple(w.radial, same, other, w.laplace);
    auto it = images.find(key);
    if (it == images.end()) {
      WeylOp1 t = radial_factor_op(w.radial) * euler_same_side_op(same, m) * euler_other_side_op(other) *
                  laplace_power_op(w.laplace, m);
      it = images.emplace(key, std::move(t)).first;
    }
    WeylOp1 scaled = it->second;
    out += scaled.scale(c);
  }
  return out;
}

WeylOp2 angular_derivative() { return WeylOp2::monomial(1, 0, 1, 0) - WeylOp2::monomial(0, 1, 0, 1); }

WeylOp2 projector_as_operator(const std::vector<int>& s, int pick) {
  std::set<int> seen;
  for (int k : s)
    if (!seen.insert(k).second) throw DomainError("projector set has repeated entry " + std::to_string(k));
  if (!seen.count(pick)) throw DomainError("projector pick " + std::to_string(pick) + " is not in the set");
  const WeylOp2 a = angular_derivative();
  WeylOp2 out = WeylOp2::scalar(1);
  for (int k : s) {
    if (k == pick) continue;
    WeylOp2 factor = a - WeylOp2::scalar(k);
    factor.scale(GaussRational(1) / GaussRational(pick - k));
    out = out * factor;
  }
  return out;
}

bool verify_intertwining(const WeylOp2& d, int m, const UniPoly& p) {
  const BiPoly lhs = weyl2_apply(d, from_component(p, m));
  const BiPoly rhs = from_component(weyl1_apply(lambda_m(d, m), p), m);
  return lhs == rhs;
}

std::vector<BiExp> monomials_up_to(unsigned n) {
  std::vector<BiExp> out;
  for (unsigned deg = 0; deg <= n; ++deg)
    for (unsigned z = 0; z <= deg; ++z) out.push_back({z, deg - z});
  return out;
}

std::vector<BiPoly> kernel_bounded(const WeylOp2& d, unsigned max_degree) {
  const auto cols = monomials_up_to(max_degree);
  std::vector<BiPoly> images;
  std::map<BiExp, std::size_t> row_of;
  for (const auto& e : cols) {
    images.push_back(weyl2_apply(d, BiPoly::monomial(e.z, e.zb)));
    for (const auto& [k, c] : images.back().terms()) row_of.try_emplace(k, 0);
  }
  std::size_t r = 0;
  for (auto& [k, idx] : row_of) idx = r++;
  Matrix a(row_of.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [k, c] : images[j].terms()) a(row_of[k], j) = c;
  std::vector<BiPoly> basis;
  for (const auto& v : nullspace(std::move(a))) {
    BiPoly p;
    for (std::size_t j = 0; j < cols.size(); ++j) p.add_term(cols[j], v[j]);
    basis.push_back(std::move(p));
  }
  return basis;
}

std::vector<UniPoly> component_kernel_bounded(const WeylOp1& t, unsigned max_degree) {
  std::vector<UniPoly> images;
  unsigned top = 0;
  for (unsigned k = 0; k <= max_degree; ++k) {
    images.push_back(weyl1_apply(t, UniPoly::monomial(k)));
    if (!images.back().is_zero()) top = std::max(top, static_cast<unsigned>(images.back().degree()));
  }
  Matrix a(top + 1, max_degree + 1);
  for (unsigned k = 0; k <= max_degree; ++k)
    for (const auto& [i, c] : images[k].terms()) a(i, k) = c;
  std::vector<UniPoly> basis;
  for (const auto& v : nullspace(std::move(a))) {
    UniPoly f;
    for (unsigned k = 0; k <= max_degree; ++k) f.add_term(k, v[k]);
    basis.push_back(std::move(f));
  }
  return basis;
}

}  // namespace weylharm
