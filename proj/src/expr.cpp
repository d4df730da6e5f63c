#include "weylharm/expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <vector>

#include "weylharm/errors.hpp"
#include "weylharm/format.hpp"

namespace weylharm {

namespace {

enum class Tok { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) return {Tok::End, start, {}};
    const char ch = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        const std::size_t den = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == den) throw SyntaxError(den, "expected denominator digits after '/'");
      }
      return {Tok::Num, start, src_.substr(start, pos_ - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return {Tok::Ident, start, src_.substr(start, pos_ - start)};
    }
    ++pos_;
    switch (ch) {
      case '+': return {Tok::Plus, start, src_.substr(start, 1)};
      case '-': return {Tok::Minus, start, src_.substr(start, 1)};
      case '*': return {Tok::Star, start, src_.substr(start, 1)};
      case '^': return {Tok::Caret, start, src_.substr(start, 1)};
      case '(': return {Tok::LParen, start, src_.substr(start, 1)};
      case ')': return {Tok::RParen, start, src_.substr(start, 1)};
      default: break;
    }
    const unsigned char u = static_cast<unsigned char>(ch);
    std::string shown = std::isprint(u) ? std::string(1, ch) : "\\x" + std::to_string(u);
    throw SyntaxError(start, "unexpected character '" + shown + "'");
  }

 private:
  std::string_view src_;
  std::size_t pos_ = 0;
};

// Per-algebra hooks: which identifiers are atoms and how big a value is.
template <class V>
struct Algebra;

template <>
struct Algebra<BiPoly> {
  static std::optional<BiPoly> atom(std::string_view name) {
    if (name == "z") return BiPoly::monomial(1, 0);
    if (name == "zb") return BiPoly::monomial(0, 1);
    return std::nullopt;
  }
  static BiPoly scalar(const GaussRational& c) { return BiPoly::constant(c); }
  static unsigned degree(const BiPoly& v) { return static_cast<unsigned>(std::max(v.degree(), 0)); }
  static constexpr const char* what = "polynomial";
};

template <>
struct Algebra<WeylOp2> {
  static std::optional<WeylOp2> atom(std::string_view name) {
    if (name == "z") return WeylOp2::gen_z();
    if (name == "zb") return WeylOp2::gen_zb();
    if (name == "dz") return WeylOp2::gen_dz();
    if (name == "dzb") return WeylOp2::gen_dzb();
    return std::nullopt;
  }
  static WeylOp2 scalar(const GaussRational& c) { return WeylOp2::scalar(c); }
  static unsigned degree(const WeylOp2& v) {
    unsigned d = 0;
    for (const auto& [e, c] : v.terms()) d = std::max(d, e.z + e.zb + e.dz + e.dzb);
    return d;
  }
  static constexpr const char* what = "operator";
};

template <>
struct Algebra<UniPoly> {
  static std::optional<UniPoly> atom(std::string_view name) {
    if (name == "x") return UniPoly::monomial(1);
    return std::nullopt;
  }
  static UniPoly scalar(const GaussRational& c) { return UniPoly::constant(c); }
  static unsigned degree(const UniPoly& v) { return static_cast<unsigned>(std::max(v.degree(), 0)); }
  static constexpr const char* what = "univariate polynomial";
};

template <>
struct Algebra<WeylOp1> {
  static std::optional<WeylOp1> atom(std::string_view name) {
    if (name == "x") return WeylOp1::monomial(1, 0);
    if (name == "d") return WeylOp1::monomial(0, 1);
    return std::nullopt;
  }
  static WeylOp1 scalar(const GaussRational& c) { return WeylOp1::scalar(c); }
  static unsigned degree(const WeylOp1& v) {
    unsigned d = 0;
    for (const auto& [e, c] : v.terms()) d = std::max(d, e.x + e.d);
    return d;
  }
  static constexpr const char* what = "one-variable operator";
};

template <class V>
class Parser {
  using A = Algebra<V>;

 public:
  Parser(std::string_view src, const ParseLimits& limits) : lex_(src), limits_(limits) { advance(); }

  V parse() {
    V v = expr();
    if (tok_.kind != Tok::End) fail("unexpected '" + std::string(tok_.text) + "'; multiplication must be explicit");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(tok_.offset, msg); }
  [[noreturn]] void limit(std::size_t offset, const std::string& msg) const { throw LimitError(offset, msg); }

  void advance() { tok_ = lex_.next(); }

  void check_size(const V& v, std::size_t offset) const {
    if (v.size() > limits_.max_terms) limit(offset, "expression expands past " + std::to_string(limits_.max_terms) + " terms");
    if (A::degree(v) > limits_.max_degree) limit(offset, "expression degree exceeds " + std::to_string(limits_.max_degree));
  }

  V multiply(const V& a, const V& b, std::size_t offset) const {
    if (a.size() * b.size() > limits_.max_product_work) limit(offset, "product too large to expand");
    if (A::degree(a) + A::degree(b) > limits_.max_degree)
      limit(offset, "expression degree exceeds " + std::to_string(limits_.max_degree));
    V out = a * b;
    check_size(out, offset);
    return out;
  }

  V expr() {
    V acc;
    bool first = true;
    for (;;) {
      bool negate = false;
      if (!first) {
        if (tok_.kind != Tok::Plus && tok_.kind != Tok::Minus) break;
        negate = tok_.kind == Tok::Minus;
        advance();
      }
      if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
        negate = negate != (tok_.kind == Tok::Minus);
        advance();
      }
      const std::size_t at = tok_.offset;
      V t = term();
      if (negate) acc -= t;
      else acc += t;
      check_size(acc, at);
      first = false;
    }
    return acc;
  }

  V term() {
    V acc = factor();
    while (tok_.kind == Tok::Star) {
      const std::size_t at = tok_.offset;
      advance();
      V rhs = factor();
      acc = multiply(acc, rhs, at);
    }
    return acc;
  }

  V factor() {
    V b = base();
    if (tok_.kind != Tok::Caret) return b;
    advance();
    if (tok_.kind != Tok::Num || tok_.text.find('/') != std::string_view::npos)
      fail("expected a natural exponent after '^'");
    const std::size_t at = tok_.offset;
    if (tok_.text.size() > 9 || std::stoul(std::string(tok_.text)) > limits_.max_exponent)
      limit(at, "exponent exceeds " + std::to_string(limits_.max_exponent));
    const unsigned e = static_cast<unsigned>(std::stoul(std::string(tok_.text)));
    advance();
    V out = A::scalar(1);
    for (unsigned k = 0; k < e; ++k) out = multiply(out, b, at);
    return out;
  }

  V base() {
    const Token t = tok_;
    switch (t.kind) {
      case Tok::LParen: {
        if (++depth_ > limits_.max_nesting) limit(t.offset, "parentheses nested too deeply");
        advance();
        V v = expr();
        if (tok_.kind != Tok::RParen) fail("expected ')'");
        advance();
        --depth_;
        return v;
      }
      case Tok::Num: {
        advance();
        Rational r;
        try {
          r = Rational::parse(t.text);
        } catch (const SyntaxError& e) {
          throw SyntaxError(t.offset, "invalid literal '" + std::string(t.text) + "'");
        }
        return A::scalar(r);
      }
      case Tok::Ident: {
        advance();
        if (t.text == "i") return A::scalar(GaussRational::imaginary_unit());
        if (auto v = A::atom(t.text)) return *v;
        throw SyntaxError(t.offset, "unknown name '" + std::string(t.text) + "' in " + A::what);
      }
      case Tok::End: fail("unexpected end of input");
      default: fail("unexpected '" + std::string(t.text) + "'");
    }
  }

  Lexer lex_;
  ParseLimits limits_;
  Token tok_{Tok::End, 0, {}};
  unsigned depth_ = 0;
};

template <class V>
V parse_as(std::string_view src, const ParseLimits& limits) {
  return Parser<V>(src, limits).parse();
}

}  // namespace

BiPoly parse_poly(std::string_view src, const ParseLimits& limits) { return parse_as<BiPoly>(src, limits); }
WeylOp2 parse_op(std::string_view src, const ParseLimits& limits) { return parse_as<WeylOp2>(src, limits); }
UniPoly parse_unipoly(std::string_view src, const ParseLimits& limits) { return parse_as<UniPoly>(src, limits); }
WeylOp1 parse_op1(std::string_view src, const ParseLimits& limits) { return parse_as<WeylOp1>(src, limits); }

std::string to_string(const BiPoly& p) {
  std::vector<std::pair<GaussRational, std::string>> parts;
  for (const auto& [e, c] : p.terms()) parts.emplace_back(c, format_monomial({{"z", e.z}, {"zb", e.zb}}));
  return format_sum(parts);
}

std::string to_string(const UniPoly& p) {
  std::vector<std::pair<GaussRational, std::string>> parts;
  for (const auto& [k, c] : p.terms()) parts.emplace_back(c, format_monomial({{"x", k}}));
  return format_sum(parts);
}

std::string to_string(const WeylOp2& d) {
  std::vector<std::pair<GaussRational, std::string>> parts;
  for (const auto& [e, c] : d.terms())
    parts.emplace_back(c, format_monomial({{"z", e.z}, {"zb", e.zb}, {"dz", e.dz}, {"dzb", e.dzb}}));
  return format_sum(parts);
}

std::string to_string(const WeylOp1& t) {
  std::vector<std::pair<GaussRational, std::string>> parts;
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
    parts.emplace_back(it->second, format_monomial({{"x", it->first.x}, {"d", it->first.d}}));
  return format_sum(parts);
}

}  // namespace weylharm
