#include "weylharm/combinatorics.hpp"

#include <mutex>

namespace weylharm {

GaussRational pochhammer(const GaussRational& a, unsigned n) {
  GaussRational out(1);
  for (unsigned k = 0; k < n; ++k) {
    out *= a + GaussRational(k);
    if (out.is_zero()) break;
  }
  return out;
}

Rational falling(unsigned c, unsigned k) {
  if (k > c) return Rational(0);
  mpz_class r = 1;
  for (unsigned i = 0; i < k; ++i) r *= c - i;
  return Rational(r);
}

Rational factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

namespace {

// s(n+1, m) = s(n, m-1) - n s(n, m), grown on demand.
class StirlingTable {
 public:
  std::vector<Rational> row(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (rows_.size() <= n) {
      const unsigned k = static_cast<unsigned>(rows_.size()) - 1;
      const auto& prev = rows_.back();
      std::vector<Rational> next(k + 2);
      for (unsigned m = 0; m <= k + 1; ++m) {
        Rational v;
        if (m >= 1) v += prev[m - 1];
        if (m <= k) v -= Rational(k) * prev[m];
        next[m] = v;
      }
      rows_.push_back(std::move(next));
    }
    return rows_[n];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Rational>> rows_{{Rational(1)}};
};

StirlingTable& table() {
  static StirlingTable t;
  return t;
}

}  // namespace

std::vector<Rational> stirling_first_row(unsigned n) { return table().row(n); }

Rational stirling_first(unsigned n, unsigned m) {
  if (m > n) return Rational(0);
  return table().row(n)[m];
}

}  // namespace weylharm
