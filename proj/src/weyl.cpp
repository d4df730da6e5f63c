#include "weylharm/weyl.hpp"

#include <algorithm>

#include "weylharm/combinatorics.hpp"
#include "weylharm/kernels.hpp"

namespace weylharm {

WeylOp2 WeylOp2::multiplication(const BiPoly& p) {
  WeylOp2 out;
  for (const auto& [e, c] : p.terms()) out.add_term({e.z, e.zb, 0, 0}, c);
  return out;
}

unsigned WeylOp2::order() const {
  unsigned o = 0;
  for (const auto& [e, c] : terms_) o = std::max(o, e.order());
  return o;
}

WeylOp2 operator*(const WeylOp2& a, const WeylOp2& b) { return weyl2_multiply(a, b); }

WeylOp2 pow(const WeylOp2& d, unsigned n) {
  WeylOp2 out = WeylOp2::scalar(1);
  for (unsigned k = 0; k < n; ++k) out = out * d;
  return out;
}

WeylOp2 weyl2_multiply(const WeylOp2& d1, const WeylOp2& d2) {
  if (d1.size() * d2.size() >= kernels::kParallelThreshold && kernels::thread_count() > 1)
    return kernels::multiply_parallel(d1, d2);
  return kernels::multiply_serial(d1, d2);
}

BiPoly weyl2_apply(const WeylOp2& d, const BiPoly& p) {
  if (d.size() * p.size() >= kernels::kParallelThreshold && kernels::thread_count() > 1)
    return kernels::apply_parallel(d, p);
  return kernels::apply_serial(d, p);
}

WeylOp2 weyl2_commutator(const WeylOp2& d1, const WeylOp2& d2) {
  return weyl2_multiply(d1, d2) - weyl2_multiply(d2, d1);
}

WeylOp2 weyl2_conjugate(const WeylOp2& d) {
  WeylOp2 out;
  for (const auto& [e, c] : d.terms()) out.add_term({e.zb, e.z, e.dzb, e.dz}, c);
  return out;
}

WeylOp1 WeylOp1::multiplication(const UniPoly& f) {
  WeylOp1 out;
  for (const auto& [k, c] : f.terms()) out.add_term({k, 0}, c);
  return out;
}

unsigned WeylOp1::order() const {
  unsigned o = 0;
  for (const auto& [e, c] : terms_) o = std::max(o, e.d);
  return o;
}

WeylOp1 operator*(const WeylOp1& a, const WeylOp1& b) {
  // (x^a d^b)(x^c d^e) = sum_k C(b,k) falling(c,k) x^{a+c-k} d^{b-k+e}
  WeylOp1 out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      const GaussRational c = ca * cb;
      const unsigned top = std::min(ea.d, eb.x);
      for (unsigned k = 0; k <= top; ++k)
        out.add_term({ea.x + eb.x - k, ea.d - k + eb.d}, c * GaussRational(binomial(ea.d, k) * falling(eb.x, k)));
    }
  }
  return out;
}

UniPoly weyl1_apply(const WeylOp1& t, const UniPoly& f) {
  UniPoly out;
  for (const auto& [e, c] : t.terms())
    for (const auto& [k, cf] : f.terms())
      if (e.d <= k) out.add_term(k - e.d + e.x, c * cf * GaussRational(falling(k, e.d)));
  return out;
}

}  // namespace weylharm
