#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weylharm {

/// Exact rational number with arbitrary-precision numerator and denominator.
/// Always canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const noexcept { return sgn(value_); }

  /// Numerator plus denominator bit length; a proxy for arithmetic cost.
  std::size_t bit_length() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// `p` for integers, `p/q` otherwise.
  std::string to_string() const;
  /// Accepts `[+-]digits` or `[+-]digits/digits`.
  static Rational parse(std::string_view text);

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of Q(i): re + im*i with exact rational parts. All coefficients
/// of polynomials and operators live here.
class GaussRational {
 public:
  GaussRational() = default;

  template <std::integral T>
  GaussRational(T v) : re_(v) {}  // NOLINT(google-explicit-constructor)

  GaussRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_integer() const { return im_.is_zero() && re_.is_integer(); }
  /// True for 0, -1, -2, ...
  bool is_nonpositive_integer() const { return is_integer() && re_.sign() <= 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |x|^2 = re^2 + im^2.
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  std::size_t bit_length() const { return re_.bit_length() + im_.bit_length(); }

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& rhs);
  GaussRational& operator-=(const GaussRational& rhs);
  GaussRational& operator*=(const GaussRational& rhs);
  GaussRational& operator/=(const GaussRational& rhs);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

  /// `p/q`, `p/q*i`, `p/q+r/s*i`, with `i` for unit imaginary parts.
  std::string to_string() const;
  static GaussRational parse(std::string_view text);

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

}  // namespace weylharm
