#include "weylharm/kernels.hpp"

#include <algorithm>
#include <vector>

#ifdef WEYLHARM_HAVE_OPENMP
#include <omp.h>
#endif

#include "weylharm/combinatorics.hpp"

namespace weylharm::kernels {

namespace {

// C(a,k) * c(c-1)...(c-k+1) for k = 0..min(a,c): the coefficients in
// d^a z^c = sum_k C(a,k) falling(c,k) z^{c-k} d^{a-k}.
std::vector<Rational> reorder_coeffs(unsigned a, unsigned c) {
  std::vector<Rational> out;
  const unsigned top = std::min(a, c);
  out.reserve(top + 1);
  for (unsigned k = 0; k <= top; ++k) out.push_back(binomial(a, k) * falling(c, k));
  return out;
}

template <class Map>
void accumulate(Map& acc, const WeylExp& key, GaussRational&& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc.try_emplace(key, std::move(c));
  if (!inserted) it->second += c;
}

// Adds (ca * ea) o (cb * eb) to acc without pruning; callers prune once.
template <class Map>
void term_product(Map& acc, const WeylExp& ea, const GaussRational& ca, const WeylExp& eb,
                  const GaussRational& cb) {
  const GaussRational c = ca * cb;
  const auto kz = reorder_coeffs(ea.dz, eb.z);
  const auto kzb = reorder_coeffs(ea.dzb, eb.zb);
  for (unsigned k = 0; k < kz.size(); ++k) {
    for (unsigned l = 0; l < kzb.size(); ++l) {
      WeylExp e{ea.z + eb.z - k, ea.zb + eb.zb - l, ea.dz - k + eb.dz, ea.dzb - l + eb.dzb};
      GaussRational v = c;
      v *= GaussRational(kz[k] * kzb[l]);
      accumulate(acc, e, std::move(v));
    }
  }
}

WeylOp2 from_map(const std::map<WeylExp, GaussRational>& acc) {
  WeylOp2 out;
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

// One term of D applied to one monomial.
void term_apply(std::map<BiExp, GaussRational>& acc, const WeylExp& e, const GaussRational& c, const BiExp& m,
                const GaussRational& cm) {
  if (e.dz > m.z || e.dzb > m.zb) return;
  GaussRational v = c * cm;
  v *= GaussRational(falling(m.z, e.dz) * falling(m.zb, e.dzb));
  BiExp key{m.z - e.dz + e.z, m.zb - e.dzb + e.zb};
  auto [it, inserted] = acc.try_emplace(key, std::move(v));
  if (!inserted) it->second += v;
}

BiPoly bi_from_map(const std::map<BiExp, GaussRational>& acc) {
  BiPoly out;
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

template <class K>
std::vector<std::pair<K, GaussRational>> flatten(const std::map<K, GaussRational>& m) {
  return {m.begin(), m.end()};
}

}  // namespace

int thread_count() {
#ifdef WEYLHARM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

WeylOp2 multiply_serial(const WeylOp2& a, const WeylOp2& b) {
  std::map<WeylExp, GaussRational> acc;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) term_product(acc, ea, ca, eb, cb);
  return from_map(acc);
}

WeylOp2 multiply_parallel(const WeylOp2& a, const WeylOp2& b) {
#ifdef WEYLHARM_HAVE_OPENMP
  const auto lhs = flatten(a.terms());
  const int n = static_cast<int>(lhs.size());
  const int threads = std::max(1, std::min(thread_count(), n));
  std::vector<std::map<WeylExp, GaussRational>> partial(threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    auto& acc = partial[omp_get_thread_num()];
    for (const auto& [eb, cb] : b.terms()) term_product(acc, lhs[i].first, lhs[i].second, eb, cb);
  }
  std::map<WeylExp, GaussRational> merged;
  for (auto& part : partial)
    for (auto& [e, c] : part) accumulate(merged, e, std::move(c));
  return from_map(merged);
#else
  return multiply_serial(a, b);
#endif
}

BiPoly apply_serial(const WeylOp2& d, const BiPoly& p) {
  std::map<BiExp, GaussRational> acc;
  for (const auto& [e, c] : d.terms())
    for (const auto& [m, cm] : p.terms()) term_apply(acc, e, c, m, cm);
  return bi_from_map(acc);
}

BiPoly apply_parallel(const WeylOp2& d, const BiPoly& p) {
#ifdef WEYLHARM_HAVE_OPENMP
  const auto ops = flatten(d.terms());
  const int n = static_cast<int>(ops.size());
  const int threads = std::max(1, std::min(thread_count(), n));
  std::vector<std::map<BiExp, GaussRational>> partial(threads);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    auto& acc = partial[omp_get_thread_num()];
    for (const auto& [m, cm] : p.terms()) term_apply(acc, ops[i].first, ops[i].second, m, cm);
  }
  std::map<BiExp, GaussRational> merged;
  for (auto& part : partial)
    for (auto& [e, c] : part) {
      auto [it, inserted] = merged.try_emplace(e, std::move(c));
      if (!inserted) it->second += c;
    }
  return bi_from_map(merged);
#else
  return apply_serial(d, p);
#endif
}

}  // namespace weylharm::kernels
