#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "weylharm/weyl.hpp"

namespace weylharm {

/// Size limits enforced while evaluating expression text. Exceeding one
/// raises LimitError at the offending token.
struct ParseLimits {
  unsigned max_exponent = 64;
  unsigned max_degree = 512;
  std::size_t max_terms = 20000;
  /// Rejects a product whose operand term counts multiply past this.
  std::size_t max_product_work = 200000;
  unsigned max_nesting = 200;
};

/// Grammar, whitespace-insensitive:
///   expr   := sign? term (('+'|'-') sign? term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := '(' expr ')' | atom | literal
/// Literals are `digits` or `digits/digits`; `i` is the imaginary unit.
/// Multiplication must be written out. Each parser accepts its own atoms:
/// z zb (poly), z zb dz dzb (op), x (unipoly), x d (op1).
BiPoly parse_poly(std::string_view src, const ParseLimits& limits = {});
WeylOp2 parse_op(std::string_view src, const ParseLimits& limits = {});
UniPoly parse_unipoly(std::string_view src, const ParseLimits& limits = {});
WeylOp1 parse_op1(std::string_view src, const ParseLimits& limits = {});

/// Canonical text. Term order: BiPoly and UniPoly ascending graded-lex,
/// WeylOp2 ascending by (order, dz, z+zb, z), WeylOp1 descending by (d, x).
std::string to_string(const BiPoly& p);
std::string to_string(const UniPoly& p);
std::string to_string(const WeylOp2& d);
std::string to_string(const WeylOp1& t);

}  // namespace weylharm
