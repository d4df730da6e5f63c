#include "weylharm/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "weylharm/errors.hpp"
#include "weylharm/expr.hpp"
#include "weylharm/harmonic.hpp"
#include "weylharm/invariance.hpp"
#include "weylharm/json_codec.hpp"
#include "weylharm/reduction.hpp"

namespace weylharm {

namespace {

using nlohmann::json;

struct Context {
  std::ostream& out;
  std::istream& in;
  bool as_json = false;
  bool stdin_used = false;

  // `-` reads the whole of stdin, once.
  std::string source(const std::string& arg) {
    if (arg != "-") return arg;
    if (stdin_used) throw SyntaxError(0, "stdin can only be used for one argument");
    stdin_used = true;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }

  void emit(const json& j) { out << j.dump() << '\n'; }
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw SyntaxError(0, "bad integer '" + item + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw SyntaxError(0, "empty integer list");
  return out;
}

// `m:c,m:c,...` with c in scalar text form.
std::map<int, GaussRational> parse_coeff_list(const std::string& text) {
  std::map<int, GaussRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw SyntaxError(0, "expected m:c, got '" + item + "'");
    const auto m = parse_int_list(item.substr(0, colon));
    if (m.size() != 1) throw SyntaxError(0, "bad index in '" + item + "'");
    out[m[0]] += GaussRational::parse(item.substr(colon + 1));
  }
  return out;
}

std::string scalar_factor(const GaussRational& c) {
  if (c.is_real() || c.re().is_zero()) return c.to_string();
  return "(" + c.to_string() + ")";
}

void cmd_normalize(Context& ctx, const std::string& e) {
  const WeylOp2 d = parse_op(ctx.source(e));
  if (ctx.as_json) return ctx.emit(to_json(d));
  ctx.out << to_string(d) << '\n';
}

void cmd_invariant(Context& ctx, const std::string& e) {
  const bool v = is_rotation_invariant(parse_op(ctx.source(e)));
  if (ctx.as_json) return ctx.emit({{"invariant", v}});
  ctx.out << (v ? "true" : "false") << '\n';
}

void cmd_factor(Context& ctx, const std::string& e) {
  const WeylOp2 d = parse_op(ctx.source(e));
  if (!is_rotation_invariant(d)) throw DomainError("operator is not rotation invariant");
  json arr = json::array();
  for (const auto& [exp, c] : d.terms()) {
    const GeneratorWord w = factor_invariant_basis_element(exp);
    if (ctx.as_json) {
      arr.push_back({{"c", c.to_string()}, {"radial", w.radial}, {"euler_z", w.euler_z},
                     {"euler_zb", w.euler_zb}, {"laplace", w.laplace}});
    } else {
      if (c != GaussRational(1)) ctx.out << scalar_factor(c) << " * ";
      ctx.out << w.to_string() << '\n';
    }
  }
  if (ctx.as_json) ctx.emit({{"factors", arr}});
}

void cmd_generators(Context& ctx, const std::string& e) {
  const GeneratorExpr g = rewrite_in_generators(parse_op(ctx.source(e)));
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& [k, c] : g.terms())
      arr.push_back({{"c", c.to_string()}, {"radial", k.r}, {"euler_z", k.e}, {"euler_zb", k.eb}, {"laplace", k.l}});
    return ctx.emit({{"text", g.to_string()}, {"terms", arr}});
  }
  ctx.out << g.to_string() << '\n';
}

void cmd_reduce(Context& ctx, int m, const std::string& e) {
  const WeylOp1 t = lambda_m(parse_op(ctx.source(e)), m);
  if (ctx.as_json) return ctx.emit(to_json(t));
  ctx.out << to_string(t) << '\n';
}

void cmd_apply(Context& ctx, const std::string& op, const std::string& poly) {
  const WeylOp2 d = parse_op(ctx.source(op));
  const BiPoly p = weyl2_apply(d, parse_poly(ctx.source(poly)));
  if (ctx.as_json) return ctx.emit(to_json(p));
  ctx.out << to_string(p) << '\n';
}

void cmd_project(Context& ctx, const std::string& set, int pick, const std::string& poly) {
  const WeylOp2 pi = projector_as_operator(parse_int_list(set), pick);
  const BiPoly p = weyl2_apply(pi, parse_poly(ctx.source(poly)));
  if (ctx.as_json) return ctx.emit(to_json(p));
  ctx.out << to_string(p) << '\n';
}

void cmd_kernel(Context& ctx, unsigned max_deg, const std::string& e) {
  if (max_deg > 24) throw LimitError(0, "--max-deg is capped at 24");
  const auto basis = kernel_bounded(parse_op(ctx.source(e)), max_deg);
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& b : basis) arr.push_back(to_json(b));
    return ctx.emit({{"dim", basis.size()}, {"basis", arr}});
  }
  ctx.out << "dim " << basis.size() << '\n';
  for (const auto& b : basis) ctx.out << to_string(b) << '\n';
}

void cmd_order(Context& ctx, const std::string& e) {
  const unsigned n = polyharmonic_order(parse_poly(ctx.source(e)));
  if (ctx.as_json) return ctx.emit({{"order", n}});
  ctx.out << n << '\n';
}

void cmd_almansi(Context& ctx, const std::string& e) {
  const auto a = almansi_decompose(parse_poly(ctx.source(e)));
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& q : a.layers) arr.push_back(to_json(q));
    return ctx.emit({{"layers", arr}});
  }
  for (std::size_t j = 0; j < a.layers.size(); ++j) ctx.out << 'q' << j << " = " << to_string(a.layers[j]) << '\n';
}

void cmd_cellular(Context& ctx, std::optional<unsigned> order, const std::string& e) {
  if (order && *order > 64) throw LimitError(0, "--order is capped at 64");
  const auto cd = cellular_decompose(parse_poly(ctx.source(e)), order);
  if (ctx.as_json) return ctx.emit(to_json(cd));
  ctx.out << "order " << cd.order << '\n';
  for (std::size_t j = 0; j < cd.layers.size(); ++j) ctx.out << 'w' << j << " = " << to_string(cd.layers[j]) << '\n';
  for (const auto& [key, c] : cd.coeffs)
    ctx.out << "k[" << key.first << "," << key.second << "] = " << c.to_string() << '\n';
}

void cmd_inner(Context& ctx, bool l2, const std::string& a, const std::string& b) {
  const BiPoly p = parse_poly(ctx.source(a));
  const BiPoly q = parse_poly(ctx.source(b));
  if (l2) {
    const GaussRational v = l2_disc_inner_product(p, q);
    if (ctx.as_json) return ctx.emit({{"value", v.to_string()}});
    ctx.out << v.to_string() << '\n';
    return;
  }
  const UniPoly v = module_inner_product(p, q);
  if (ctx.as_json) return ctx.emit({{"value", to_json(v)}});
  ctx.out << to_string(v) << '\n';
}

void cmd_obasis(Context& ctx, unsigned m, unsigned n) {
  if (m > 256 || n > 64) throw LimitError(0, "obasis is capped at m <= 256, n <= 64");
  const OBasis b = o_basis(m, n);
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& p : b.polys) arr.push_back(to_json(p));
    return ctx.emit({{"m", m}, {"n", n}, {"polys", arr}});
  }
  for (unsigned l = 0; l <= n; ++l) ctx.out << 'O' << l << " = " << to_string(b.polys[l]) << '\n';
}

void cmd_gamma_expand(Context& ctx, const std::string& g1, const std::string& g2, const std::string& coeffs) {
  GammaHarmonicCoefficients g{GaussRational::parse(g1), GaussRational::parse(g2), parse_coeff_list(coeffs)};
  for (const auto& [m, c] : g.c)
    if (std::abs(m) > 256) throw LimitError(0, "component index is capped at 256");
  const BiPoly p = gamma_harmonic_from_coeffs(g);
  if (ctx.as_json) return ctx.emit(to_json(p));
  ctx.out << to_string(p) << '\n';
}

void cmd_gamma_coeffs(Context& ctx, const std::string& g1, const std::string& g2, const std::string& e) {
  const auto g = gamma_harmonic_to_coeffs(parse_poly(ctx.source(e)), GaussRational::parse(g1), GaussRational::parse(g2));
  if (ctx.as_json) {
    json arr = json::array();
    for (const auto& [m, c] : g.c) arr.push_back({{"m", m}, {"c", c.to_string()}});
    return ctx.emit({{"g1", g.g1.to_string()}, {"g2", g.g2.to_string()}, {"coeffs", arr}});
  }
  for (const auto& [m, c] : g.c) ctx.out << "c[" << m << "] = " << c.to_string() << '\n';
}

bool env_json() {
  const char* v = std::getenv("WEYLHARM_JSON");
  return v != nullptr && std::string(v) == "1";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exact arithmetic for rotation-invariant operators and polyharmonic decompositions", "weylharm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all commands");
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (also WEYLHARM_JSON=1)");

  std::function<void(Context&)> action;
  std::string e1, e2, set, g1, g2, coeffs;
  int m = 0, pick = 0;
  unsigned max_deg = 0, n = 0, um = 0, order_value = 0;
  bool l2 = false;

  auto expr_arg = [](CLI::App* sub, std::string& target, const char* name, const char* desc) {
    sub->add_option(name, target, desc)->required();
  };
  // Subcommands also accept --json after the command name.
  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->add_flag("--json", json_flag, "JSON output");
    return s;
  };

  auto* s = sub("normalize", "Print the canonical form of an operator");
  expr_arg(s, e1, "op", "operator expression");
  s->callback([&] { action = [&](Context& c) { cmd_normalize(c, e1); }; });

  s = sub("invariant", "Test rotation invariance of an operator");
  expr_arg(s, e1, "op", "operator expression");
  s->callback([&] { action = [&](Context& c) { cmd_invariant(c, e1); }; });

  s = sub("factor", "Factor each term of an invariant operator into generator powers");
  expr_arg(s, e1, "op", "operator expression");
  s->callback([&] { action = [&](Context& c) { cmd_factor(c, e1); }; });

  s = sub("generators", "Rewrite an invariant operator in z*zb, z*dz, zb*dzb, dz*dzb");
  expr_arg(s, e1, "op", "operator expression");
  s->callback([&] { action = [&](Context& c) { cmd_generators(c, e1); }; });

  s = sub("reduce", "Ordinary differential operator induced on component m");
  s->add_option("--m", m, "component index")->required();
  expr_arg(s, e1, "op", "operator expression");
  s->callback([&] { action = [&](Context& c) { cmd_reduce(c, m, e1); }; });

  s = sub("apply", "Apply an operator to a polynomial");
  expr_arg(s, e1, "op", "operator expression");
  expr_arg(s, e2, "poly", "polynomial expression");
  s->callback([&] { action = [&](Context& c) { cmd_apply(c, e1, e2); }; });

  s = sub("project", "Apply the angular projector picking one component out of a set");
  s->add_option("--set", set, "comma-separated distinct component indices")->required();
  s->add_option("--pick", pick, "component to keep")->required();
  expr_arg(s, e1, "poly", "polynomial expression");
  s->callback([&] { action = [&](Context& c) { cmd_project(c, set, pick, e1); }; });

  s = sub("kernel", "Basis of the kernel on polynomials of bounded degree");
  s->add_option("--max-deg", max_deg, "degree bound")->required();
  expr_arg(s, e1, "op", "operator expression");
  s->callback([&] { action = [&](Context& c) { cmd_kernel(c, max_deg, e1); }; });

  s = sub("order", "Polyharmonic order of a polynomial");
  expr_arg(s, e1, "poly", "polynomial expression");
  s->callback([&] { action = [&](Context& c) { cmd_order(c, e1); }; });

  s = sub("almansi", "Harmonic layers q_j with p = sum (1-|z|^2)^j q_j");
  expr_arg(s, e1, "poly", "polynomial expression");
  s->callback([&] { action = [&](Context& c) { cmd_almansi(c, e1); }; });

  s = sub("cellular", "Cellular decomposition into generalized harmonic layers");
  auto* order_opt = s->add_option("--order", order_value, "force a larger order");
  expr_arg(s, e1, "poly", "polynomial expression");
  s->callback([&, order_opt] {
    action = [&, order_opt](Context& c) {
      cmd_cellular(c, order_opt->count() ? std::optional<unsigned>(order_value) : std::nullopt, e1);
    };
  });

  s = sub("inner", "Module inner product, or the disc L2 product with --l2");
  s->add_flag("--l2", l2, "normalized disc integral instead of the module product");
  expr_arg(s, e1, "p", "polynomial expression");
  expr_arg(s, e2, "q", "polynomial expression");
  s->callback([&] { action = [&](Context& c) { cmd_inner(c, l2, e1, e2); }; });

  s = sub("obasis", "O-basis polynomials for given m and n");
  s->add_option("--m", um, "natural m")->required();
  s->add_option("--n", n, "natural n")->required();
  s->callback([&] { action = [&](Context& c) { cmd_obasis(c, um, n); }; });

  s = sub("gamma-expand", "Build a (g1,g2)-harmonic polynomial from coefficients");
  s->add_option("--g1", g1, "gamma_1")->required();
  s->add_option("--g2", g2, "gamma_2")->required();
  s->add_option("--coeffs", coeffs, "m:c,m:c,...")->required();
  s->callback([&] { action = [&](Context& c) { cmd_gamma_expand(c, g1, g2, coeffs); }; });

  s = sub("gamma-coeffs", "Recover the coefficients of a (g1,g2)-harmonic polynomial");
  s->add_option("--g1", g1, "gamma_1")->required();
  s->add_option("--g2", g2, "gamma_2")->required();
  expr_arg(s, e1, "poly", "polynomial expression");
  s->callback([&] { action = [&](Context& c) { cmd_gamma_coeffs(c, g1, g2, e1); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error:usage:" << e.what() << '\n';
    return kExitSyntax;
  }

  Context ctx{out, in, json_flag || env_json(), false};
  try {
    action(ctx);
  } catch (const LimitError& e) {
    err << "error:limit:" << e.what() << '\n';
    return kExitSyntax;
  } catch (const SyntaxError& e) {
    err << "error:syntax:" << e.what() << '\n';
    return kExitSyntax;
  } catch (const DomainError& e) {
    err << "error:domain:" << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error:internal:" << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace weylharm
