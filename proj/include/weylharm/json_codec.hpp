#pragma once

#include "json.hpp"

#include "weylharm/harmonic.hpp"

namespace weylharm {

// Scalars are always strings in the exact text form, never JSON numbers.

nlohmann::json to_json(const GaussRational& c);
nlohmann::json to_json(const BiPoly& p);     // {"terms":[{"z":i,"zb":j,"c":"1/2"}]}
nlohmann::json to_json(const UniPoly& p);    // {"terms":[{"x":k,"c":...}]}
nlohmann::json to_json(const WeylOp2& d);    // {"terms":[{"z":..,"zb":..,"dz":..,"dzb":..,"c":...}]}
nlohmann::json to_json(const WeylOp1& t);    // {"terms":[{"x":..,"d":..,"c":...}]}
nlohmann::json to_json(const CellularDecomposition& cd);

GaussRational scalar_from_json(const nlohmann::json& j);
BiPoly bipoly_from_json(const nlohmann::json& j);
WeylOp2 weylop2_from_json(const nlohmann::json& j);
CellularDecomposition cellular_from_json(const nlohmann::json& j);

}  // namespace weylharm
