#include "weylharm/linalg.hpp"

#include <limits>
#include <utility>

#include "weylharm/errors.hpp"

#ifdef WEYLHARM_HAVE_OPENMP
#include <omp.h>
#endif

namespace weylharm {

namespace {

constexpr std::size_t kParallelCells = 1 << 12;

void swap_rows(Matrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

// row r -= f * row p, starting at column c0 (earlier pivot columns are zero in p).
void eliminate(Matrix& a, std::size_t r, std::size_t p, std::size_t c0) {
  const GaussRational f = a(r, c0);
  if (f.is_zero()) return;
  for (std::size_t c = c0; c < a.cols(); ++c)
    if (!a(p, c).is_zero()) a(r, c) -= f * a(p, c);
}

template <bool Parallel>
std::vector<std::size_t> rref_impl(Matrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = a.rows();
    std::size_t best_bits = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = row; r < a.rows(); ++r) {
      if (a(r, col).is_zero()) continue;
      const std::size_t bits = a(r, col).bit_length();
      if (bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best == a.rows()) continue;
    swap_rows(a, row, best);
    const GaussRational inv = GaussRational(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c)
      if (!a(row, c).is_zero()) a(row, c) *= inv;

    const long n = static_cast<long>(a.rows());
    if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long r = 0; r < n; ++r)
        if (static_cast<std::size_t>(r) != row) eliminate(a, static_cast<std::size_t>(r), row, col);
    } else {
      for (long r = 0; r < n; ++r)
        if (static_cast<std::size_t>(r) != row) eliminate(a, static_cast<std::size_t>(r), row, col);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref_serial(Matrix& a) { return rref_impl<false>(a); }

std::vector<std::size_t> rref_parallel(Matrix& a) { return rref_impl<true>(a); }

std::vector<std::size_t> rref(Matrix& a) {
#ifdef WEYLHARM_HAVE_OPENMP
  if (a.rows() * a.cols() >= kParallelCells && omp_get_max_threads() > 1) return rref_parallel(a);
#endif
  return rref_serial(a);
}

std::size_t rank(Matrix a) { return rref(a).size(); }

std::vector<std::vector<GaussRational>> nullspace(Matrix a) {
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<GaussRational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussRational> v(a.cols());
    v[free] = GaussRational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussRational>> solve(const Matrix& a, const std::vector<GaussRational>& b) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<GaussRational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

}  // namespace weylharm
