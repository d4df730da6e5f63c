#include "weylharm/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "weylharm/errors.hpp"

namespace weylharm {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::size_t Rational::bit_length() const {
  return mpz_sizeinbase(value_.get_num_mpz_t(), 2) + mpz_sizeinbase(value_.get_den_mpz_t(), 2);
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw SyntaxError(0, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw SyntaxError(0, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational n = rhs.norm2();
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  auto imag = [](const Rational& v) {
    if (v == Rational(1)) return std::string("i");
    if (v == Rational(-1)) return std::string("-i");
    return v.to_string() + "*i";
  };
  if (re_.is_zero()) return imag(im_);
  if (im_.sign() > 0) return re_.to_string() + "+" + imag(im_);
  return re_.to_string() + "-" + imag(-im_);
}

namespace {

// Reads `[+-]digits['/'digits]` starting at pos; returns the end position,
// or pos if no digits follow the optional sign.
std::size_t scan_rational(std::string_view s, std::size_t pos) {
  std::size_t p = pos;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  const std::size_t digits_begin = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p == digits_begin) return pos;
  if (p + 1 < s.size() && s[p] == '/' && std::isdigit(static_cast<unsigned char>(s[p + 1]))) {
    ++p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  }
  return p;
}

// Parses an imaginary part `[+-](rational'*i' | 'i')` spanning all of s.
bool parse_imaginary(std::string_view s, Rational& out) {
  if (s.empty() || s.back() != 'i') return false;
  std::string_view body = s.substr(0, s.size() - 1);
  if (body.empty() || body == "+") {
    out = Rational(1);
    return true;
  }
  if (body == "-") {
    out = Rational(-1);
    return true;
  }
  if (body.back() != '*') return false;
  body.remove_suffix(1);
  if (scan_rational(body, 0) != body.size() || body.empty()) return false;
  out = Rational::parse(body);
  return true;
}

}  // namespace

GaussRational GaussRational::parse(std::string_view text) {
  const std::string bad = "malformed scalar '" + std::string(text) + "'";
  if (text.empty()) throw SyntaxError(0, bad);
  Rational im;
  if (parse_imaginary(text, im)) return {Rational(0), im};
  const std::size_t end = scan_rational(text, 0);
  if (end == 0) throw SyntaxError(0, bad);
  Rational re = Rational::parse(text.substr(0, end));
  if (end == text.size()) return re;
  const std::string_view rest = text.substr(end);
  if ((rest.front() == '+' || rest.front() == '-') && parse_imaginary(rest, im)) return {re, im};
  throw SyntaxError(end, bad);
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.to_string(); }

}  // namespace weylharm
