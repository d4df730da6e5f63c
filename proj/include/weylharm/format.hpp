#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylharm/rational.hpp"

namespace weylharm {

/// `a^i*b^j...`, skipping zero exponents and writing exponent 1 bare.
std::string format_monomial(const std::vector<std::pair<std::string_view, unsigned>>& factors);

/// Joins (coefficient, monomial) pairs as `c*m + c*m - ...`. Unit
/// coefficients are dropped, complex ones parenthesized. Empty input is `0`.
std::string format_sum(const std::vector<std::pair<GaussRational, std::string>>& terms);

}  // namespace weylharm
