#include "weylharm/json_codec.hpp"

#include "weylharm/errors.hpp"

namespace weylharm {

using nlohmann::json;

json to_json(const GaussRational& c) { return c.to_string(); }

json to_json(const BiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"z", e.z}, {"zb", e.zb}, {"c", c.to_string()}});
  return {{"terms", terms}};
}

json to_json(const UniPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back({{"x", k}, {"c", c.to_string()}});
  return {{"terms", terms}};
}

json to_json(const WeylOp2& d) {
  json terms = json::array();
  for (const auto& [e, c] : d.terms())
    terms.push_back({{"z", e.z}, {"zb", e.zb}, {"dz", e.dz}, {"dzb", e.dzb}, {"c", c.to_string()}});
  return {{"terms", terms}};
}

json to_json(const WeylOp1& t) {
  json terms = json::array();
  for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
    terms.push_back({{"x", it->first.x}, {"d", it->first.d}, {"c", it->second.to_string()}});
  return {{"terms", terms}};
}

json to_json(const CellularDecomposition& cd) {
  json layers = json::array();
  for (const auto& w : cd.layers) layers.push_back(to_json(w));
  json coeffs = json::array();
  for (const auto& [key, c] : cd.coeffs) coeffs.push_back({{"m", key.first}, {"j", key.second}, {"c", c.to_string()}});
  return {{"order", cd.order}, {"layers", layers}, {"coeffs", coeffs}};
}

GaussRational scalar_from_json(const json& j) {
  if (!j.is_string()) throw DomainError("scalar must be a JSON string");
  return GaussRational::parse(j.get<std::string>());
}

BiPoly bipoly_from_json(const json& j) {
  BiPoly out;
  for (const auto& t : j.at("terms")) out.add_term({t.at("z").get<unsigned>(), t.at("zb").get<unsigned>()}, scalar_from_json(t.at("c")));
  return out;
}

WeylOp2 weylop2_from_json(const json& j) {
  WeylOp2 out;
  for (const auto& t : j.at("terms"))
    out.add_term({t.at("z").get<unsigned>(), t.at("zb").get<unsigned>(), t.at("dz").get<unsigned>(),
                  t.at("dzb").get<unsigned>()},
                 scalar_from_json(t.at("c")));
  return out;
}

CellularDecomposition cellular_from_json(const json& j) {
  CellularDecomposition out;
  out.order = j.at("order").get<unsigned>();
  for (const auto& l : j.at("layers")) out.layers.push_back(bipoly_from_json(l));
  for (const auto& c : j.at("coeffs")) out.coeffs[{c.at("m").get<int>(), c.at("j").get<unsigned>()}] = scalar_from_json(c.at("c"));
  return out;
}

}  // namespace weylharm
