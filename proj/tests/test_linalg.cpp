#include <gtest/gtest.h>

#include "generators.hpp"
#include "weylharm/linalg.hpp"

using namespace weylharm;
using namespace weylharm::testing;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int density) {
  Matrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (uniform(rng, 0, 99) < density) a(i, j) = random_scalar(rng);
  return a;
}

std::vector<GaussRational> times(const Matrix& a, const std::vector<GaussRational>& v) {
  std::vector<GaussRational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

}  // namespace

TEST(Linalg, RankNullityAndAnnihilation) {
  Rng rng(51);
  for (int k = 0; k < 100; ++k) {
    const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 7)), c = static_cast<std::size_t>(uniform(rng, 1, 7));
    const Matrix a = random_matrix(rng, r, c, 40);
    const auto ns = nullspace(a);
    EXPECT_EQ(rank(a) + ns.size(), c);
    for (const auto& v : ns)
      for (const auto& x : times(a, v)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Linalg, RrefIsReduced) {
  Rng rng(52);
  for (int k = 0; k < 50; ++k) {
    Matrix a = random_matrix(rng, 5, 6, 60);
    const auto piv = rref(a);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t r = 0; r < a.rows(); ++r) EXPECT_EQ(a(r, piv[i]), GaussRational(r == i ? 1 : 0));
    for (std::size_t r = piv.size(); r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) EXPECT_TRUE(a(r, c).is_zero());
  }
}

TEST(Linalg, SolveConsistentAndInconsistent) {
  Rng rng(53);
  for (int k = 0; k < 50; ++k) {
    const Matrix a = random_matrix(rng, 5, 4, 70);
    std::vector<GaussRational> x(4);
    for (auto& v : x) v = random_scalar(rng);
    const auto b = times(a, x);
    const auto sol = solve(a, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(times(a, *sol), b);
  }
  Matrix a(2, 1);
  a(0, 0) = GaussRational(1);
  a(1, 0) = GaussRational(1);
  EXPECT_FALSE(solve(a, {GaussRational(1), GaussRational(2)}).has_value());
}

TEST(Linalg, SerialAndParallelAgree) {
  Rng rng(54);
  for (int k = 0; k < 20; ++k) {
    Matrix a = random_matrix(rng, 12, 14, 50);
    Matrix b = a;
    EXPECT_EQ(rref_serial(a), rref_parallel(b));
    EXPECT_EQ(a, b);
  }
}
