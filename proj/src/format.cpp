#include "weylharm/format.hpp"

namespace weylharm {

std::string format_monomial(const std::vector<std::pair<std::string_view, unsigned>>& factors) {
  std::string out;
  for (const auto& [name, e] : factors) {
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += name;
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

// Splits a coefficient into a sign and the text that follows it.
std::pair<bool, std::string> signed_body(const GaussRational& c, const std::string& mono) {
  const std::string sep = mono.empty() ? "" : "*";
  if (c.im().is_zero()) {
    const Rational mag = c.re().sign() < 0 ? -c.re() : c.re();
    if (mono.empty()) return {c.re().sign() < 0, mag.to_string()};
    if (mag == Rational(1)) return {c.re().sign() < 0, mono};
    return {c.re().sign() < 0, mag.to_string() + sep + mono};
  }
  if (c.re().is_zero()) {
    const Rational mag = c.im().sign() < 0 ? -c.im() : c.im();
    const std::string s = mag == Rational(1) ? "i" : mag.to_string() + "*i";
    return {c.im().sign() < 0, s + sep + mono};
  }
  return {false, "(" + c.to_string() + ")" + sep + mono};
}

}  // namespace

std::string format_sum(const std::vector<std::pair<GaussRational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    auto [neg, body] = signed_body(c, mono);
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace weylharm
