#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "weylharm/combinatorics.hpp"
#include "weylharm/errors.hpp"

using namespace weylharm;
using namespace weylharm::testing;

TEST(Rational, CanonicalForm) {
  Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(7)).denominator(), 1);
  EXPECT_THROW(Rational(mpz_class(1), mpz_class(0)), DomainError);
}

TEST(Rational, TextRoundTrip) {
  for (const char* s : {"0", "5", "-5", "3/4", "-7/2", "123456789012345678901234567890/11"})
    EXPECT_EQ(Rational::parse(s).to_string(), s);
  EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
  EXPECT_THROW(Rational::parse("1/0"), SyntaxError);
  EXPECT_THROW(Rational::parse("x"), SyntaxError);
  EXPECT_THROW(Rational::parse("1/"), SyntaxError);
}

TEST(GaussRational, TextRoundTrip) {
  for (const char* s : {"0", "i", "-i", "3/2*i", "1/2+3/4*i", "1/2-i", "-2-5/3*i", "7"}) {
    EXPECT_EQ(GaussRational::parse(s).to_string(), s) << s;
  }
  EXPECT_THROW(GaussRational::parse(""), SyntaxError);
  EXPECT_THROW(GaussRational::parse("1+"), SyntaxError);
  EXPECT_THROW(GaussRational::parse("i*2"), SyntaxError);
}

TEST(GaussRational, RandomTextRoundTrip) {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const GaussRational x = random_scalar(rng);
    EXPECT_EQ(GaussRational::parse(x.to_string()), x);
  }
}

TEST(GaussRational, FieldLaws) {
  Rng rng(1);
  for (int k = 0; k < 300; ++k) {
    const GaussRational a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ(GaussRational(a.norm2()), a * a.conj());
    EXPECT_GT(a.norm2().sign(), 0);
  }
  EXPECT_TRUE(GaussRational().norm2().is_zero());
  EXPECT_THROW(GaussRational(1) / GaussRational(), DomainError);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(GaussRational(Rational::parse("7/3")), 0), GaussRational(1));
  EXPECT_EQ(pochhammer(GaussRational(-1), 1), GaussRational(-1));
  EXPECT_EQ(pochhammer(GaussRational(2), 2), GaussRational(6));
}

TEST(Pochhammer, StepRecurrence) {
  Rng rng(2);
  for (int k = 0; k < 100; ++k) {
    const GaussRational a = random_scalar(rng);
    for (unsigned n = 0; n < 20; ++n)
      EXPECT_EQ(pochhammer(a, n + 1), pochhammer(a, n) * (a + GaussRational(n)));
  }
}

TEST(Pochhammer, NegativeIntegerTermination) {
  for (int n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= 16; ++k)
      EXPECT_EQ(pochhammer(GaussRational(-n), k).is_zero(), k > static_cast<unsigned>(n)) << n << " " << k;
}

TEST(Stirling, Examples) {
  EXPECT_EQ(stirling_first(3, 3), Rational(1));
  EXPECT_EQ(stirling_first(3, 2), Rational(-3));
  EXPECT_EQ(stirling_first(3, 1), Rational(2));
  EXPECT_EQ(stirling_first(0, 0), Rational(1));
  EXPECT_EQ(stirling_first(2, 5), Rational(0));
}

TEST(Stirling, MatchesFallingFactorialExpansion) {
  for (unsigned n = 0; n <= 12; ++n) {
    const UniPoly f = falling_polynomial(n);
    for (unsigned m = 0; m <= n + 1; ++m) EXPECT_EQ(GaussRational(stirling_first(n, m)), f.coeff(m)) << n << "," << m;
  }
}

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(4, 0), Rational(1));
  EXPECT_EQ(binomial(4, 2), Rational(6));
  EXPECT_EQ(binomial(2, 3), Rational(0));
}

TEST(Binomial, MatchesPascal) {
  for (unsigned n = 0; n <= 30; ++n) {
    const auto row = pascal_row(n);
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), row[k]);
  }
}

TEST(Falling, Basics) {
  EXPECT_EQ(falling(5, 2), Rational(20));
  EXPECT_EQ(falling(2, 3), Rational(0));
  EXPECT_EQ(factorial(6), Rational(720));
}
