#pragma once

#include <json.hpp>

#include "plurikit/poly.hpp"

namespace plurikit {

using json = nlohmann::ordered_json;

json to_json(const BigRational& q);
json to_json(const KappaRational& f);
json to_json(const Ambient& a);
json to_json(const Poly& p);

BigRational rational_from_json(const json& j);
KappaRational kappa_rational_from_json(const json& j);
Ambient ambient_from_json(const json& j);
Poly poly_from_json(const json& j);

VarId var_from_key(const std::string& key);

}  // namespace plurikit
