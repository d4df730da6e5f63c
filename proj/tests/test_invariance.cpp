#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "weylharm/errors.hpp"
#include "weylharm/expr.hpp"
#include "weylharm/invariance.hpp"

using namespace weylharm;
using namespace weylharm::testing;

namespace {
WeylOp2 O(const char* s) { return parse_op(s); }

bool commutes_on_all_monomials(const WeylOp2& d, unsigned max_degree) {
  for (const auto& e : monomials_up_to(max_degree))
    if (!commutes_with_formal_rotation(d, BiPoly::monomial(e.z, e.zb))) return false;
  return true;
}
}  // namespace

TEST(Invariance, Examples) {
  EXPECT_TRUE(is_rotation_invariant(O("dz*dzb")));
  EXPECT_FALSE(is_rotation_invariant(O("z*dzb")));
  EXPECT_TRUE(is_rotation_invariant(O("(1 - z*zb)*dz*dzb + z*dz")));
  EXPECT_TRUE(is_rotation_invariant(WeylOp2()));
}

TEST(Invariance, FormalRotationExamples) {
  EXPECT_TRUE(commutes_with_formal_rotation(O("dz*dzb"), parse_poly("z^2*zb")));
  EXPECT_FALSE(commutes_with_formal_rotation(O("z*dzb"), parse_poly("zb")));
  EXPECT_TRUE(commutes_on_all_monomials(O("z*dz - zb*dzb"), 3));
}

TEST(Invariance, FormalRotationByHand) {
  // z dzb on zb: D(zb t^-1) = z t^-1 while (D zb)(tz) = z t.
  const RotPoly lhs = apply_rot(O("z*dzb"), rotate_formal(parse_poly("zb")));
  EXPECT_EQ(lhs, RotPoly::term({1, 0, -1}));
  EXPECT_EQ(rotate_formal(weyl2_apply(O("z*dzb"), parse_poly("zb"))), RotPoly::term({1, 0, 1}));
}

TEST(Invariance, TermwiseTestMatchesRotationOracle) {
  Rng rng(31);
  int invariant = 0;
  for (int k = 0; k < 200; ++k) {
    // Mix invariant and generic operators so both outcomes are exercised.
    const WeylOp2 d = k % 2 ? random_invariant_op(rng, 4, 6) : random_op(rng, 4, 3, 6);
    const bool termwise = is_rotation_invariant(d);
    invariant += termwise;
    EXPECT_EQ(termwise, commutes_on_all_monomials(d, d.order() + 4));
  }
  EXPECT_GT(invariant, 50);
  EXPECT_LT(invariant, 200);
}

TEST(Invariance, ClosedUnderRingOperations) {
  Rng rng(32);
  for (int k = 0; k < 100; ++k) {
    const WeylOp2 a = random_invariant_op(rng, 3, 4), b = random_invariant_op(rng, 3, 4);
    EXPECT_TRUE(is_rotation_invariant(a * b));
    EXPECT_TRUE(is_rotation_invariant(a + b));
    EXPECT_TRUE(is_rotation_invariant(weyl2_commutator(a, b)));
  }
}

TEST(Factor, Examples) {
  EXPECT_EQ(factor_invariant_basis_element({1, 2, 1, 2}), (GeneratorWord{0, 1, 2, 0}));
  EXPECT_EQ(factor_invariant_basis_element({1, 1, 0, 0}), (GeneratorWord{1, 0, 0, 0}));
  EXPECT_EQ(factor_invariant_basis_element({2, 1, 1, 0}), (GeneratorWord{1, 1, 0, 0}));
  EXPECT_EQ((GeneratorWord{1, 2, 0, 1}).to_string(), "R^1 * Ez^2 * Ebz^0 * L^1");
  EXPECT_THROW(factor_invariant_basis_element({1, 0, 0, 1}), DomainError);
}

TEST(Factor, ExhaustiveRoundTrip) {
  int count = 0;
  for (unsigned a1 = 0; a1 <= 5; ++a1)
    for (unsigned b1 = 0; b1 <= 5; ++b1)
      for (unsigned a2 = 0; a2 <= 5; ++a2)
        for (unsigned b2 = 0; b2 <= 5; ++b2) {
          const WeylExp e{a1, b1, a2, b2};
          if (!e.rotation_invariant()) {
            EXPECT_THROW(factor_invariant_basis_element(e), DomainError);
            continue;
          }
          ++count;
          EXPECT_EQ(factor_invariant_basis_element(e).expand(), WeylOp2::term(e));
        }
  EXPECT_GT(count, 100);
}

TEST(Factor, BranchesFollowListedOrder) {
  // Second branch only when the first fails; third only when both fail.
  EXPECT_EQ(factor_invariant_basis_element({2, 3, 1, 2}), (GeneratorWord{2, 0, 1, 1}));
  EXPECT_EQ(factor_invariant_basis_element({3, 1, 2, 0}), (GeneratorWord{1, 2, 0, 0}));
  EXPECT_EQ(factor_invariant_basis_element({1, 1, 1, 1}), (GeneratorWord{0, 1, 1, 0}));
}

TEST(EulerPowers, Examples) {
  EXPECT_EQ(euler_power_expand(1), (std::vector<Rational>{0, 1}));
  EXPECT_EQ(euler_power_expand(2), (std::vector<Rational>{0, -1, 1}));
  EXPECT_EQ(euler_power_expand(3), (std::vector<Rational>{0, 2, -3, 1}));
}

TEST(EulerPowers, RenormalizeToEulerOperator) {
  const WeylOp2 euler = O("z*dz");
  for (unsigned n = 0; n <= 8; ++n) {
    const auto c = euler_power_expand(n);
    WeylOp2 sum;
    for (unsigned m = 0; m <= n; ++m) sum += GaussRational(c[m]) * pow(euler, m);
    EXPECT_EQ(sum, WeylOp2::monomial(n, 0, n, 0)) << n;
  }
}

TEST(Generators, Examples) {
  EXPECT_EQ(rewrite_in_generators(O("z^2*dz^2")).to_string(), "(z*dz)^2 - (z*dz)");
  EXPECT_EQ(rewrite_in_generators(O("z*zb*dz*dzb")).to_string(), "(z*dz)*(zb*dzb)");
  EXPECT_EQ(rewrite_in_generators(O("z^2*zb^3*dz*dzb^2")).to_string(), "(z*zb)^2*(zb*dzb)*(dz*dzb)");
  EXPECT_EQ(rewrite_in_generators(O("z*zb^2*dz*dzb^2")).to_string(), "(z*dz)*(zb*dzb)^2 - (z*dz)*(zb*dzb)");
  EXPECT_THROW(rewrite_in_generators(O("z*dzb")), DomainError);
}

TEST(Generators, RoundTripRandom) {
  Rng rng(33);
  for (int k = 0; k < 100; ++k) {
    const WeylOp2 d = random_invariant_op(rng, 4, 6);
    const GeneratorExpr g = rewrite_in_generators(d);
    EXPECT_EQ(g.evaluate(), d);
    EXPECT_EQ(parse_op(g.to_string()), d);
  }
}
