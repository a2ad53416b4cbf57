#pragma once

// JSON wire formats.  Rationals always travel as exact "num/den" strings.

#include <json.hpp>

#include "knotasym/laurent.hpp"
#include "knotasym/param_poly.hpp"

namespace knotasym {

using nlohmann::json;

inline json to_json(const LaurentSeries& s) {
  json coeffs = json::array();
  for (long k = s.lowest(); k <= s.order(); ++k) coeffs.push_back(rat_to_string(s.coeff(k)));
  return json{{"var", s.var()},
              {"lowest", s.lowest()},
              {"coeffs", coeffs},
              {"order", s.order()},
              {"exact", s.exact()}};
}

inline LaurentSeries series_from_json(const json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_string(c.get<std::string>()));
  return LaurentSeries(j.at("var").get<std::string>(), j.at("lowest").get<long>(),
                       std::move(coeffs), j.at("order").get<long>(),
                       j.value("exact", false));
}

inline json to_json(const ParamPoly& p) {
  json obj = json::object();
  for (const auto& [k, v] : p.terms()) {
    std::string key = "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
    obj[key] = rat_to_string(v);
  }
  return obj;
}

inline ParamPoly param_poly_from_json(const json& j) {
  ParamPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    auto comma = key.find(',');
    long a = std::stol(key.substr(1, comma - 1));
    long b = std::stol(key.substr(comma + 1, key.size() - comma - 2));
    p += ParamPoly::monomial(rat_from_string(it.value().get<std::string>()), a, b);
  }
  return p;
}

}  // namespace knotasym
