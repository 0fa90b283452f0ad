#include "gaplab/atlas_json.hpp"

#include <stdexcept>

namespace gaplab {

using nlohmann::json;

json exact_const_to_json(const ExactConst& value) {
  if (value.degree() > 1) throw std::invalid_argument("cannot serialise products of logarithms: " + value.str());
  json j;
  j["rat"] = to_string(value.rational_part());
  j["log2"] = to_string(value.log_coefficient(2));
  json others = json::object();
  for (const auto& [m, c] : value.terms()) {
    if (m.size() == 1 && m[0] != 2) others[std::to_string(m[0])] = to_string(c);
  }
  if (!others.empty()) j["log"] = others;
  return j;
}

ExactConst exact_const_from_json(const json& j) {
  ExactConst out(parse_rational(j.at("rat").get<std::string>()));
  if (j.contains("log2")) out += ExactConst(parse_rational(j.at("log2").get<std::string>())) * ExactConst::log_prime(2);
  if (j.contains("log")) {
    for (const auto& [p, c] : j.at("log").items()) {
      out += ExactConst(parse_rational(c.get<std::string>())) * ExactConst::log_prime(std::stoull(p));
    }
  }
  return out;
}

json atlas_to_json(const RegionAtlas& atlas) {
  json j;
  j["schema"] = kSchemaVersion;
  j["h"] = atlas.h;
  json tb = json::array();
  for (const auto& t : atlas.t_breakpoints) tb.push_back(to_string(t));
  j["t_breakpoints"] = tb;
  json regions = json::array();
  for (const auto& r : atlas.regions) {
    json jr;
    jr["name"] = r.name;
    json cs = json::array();
    for (const auto& c : r.constraints)
      cs.push_back({{"kind", to_string(c.kind)}, {"op", to_string(c.op)}, {"c", to_string(c.c)}});
    jr["constraints"] = cs;
    json kappa;
    for (std::size_t i = 0; i < r.kappa.size(); ++i) kappa["k" + std::to_string(i + 1)] = exact_const_to_json(r.kappa[i]);
    jr["kappa"] = kappa;
    regions.push_back(jr);
  }
  j["regions"] = regions;
  return j;
}

RegionAtlas atlas_from_json(const json& j) {
  if (j.contains("schema") && j.at("schema").get<int>() != kSchemaVersion)
    throw std::invalid_argument("atlas_from_json: unsupported schema " + j.at("schema").dump());
  RegionAtlas atlas;
  atlas.h = j.at("h").get<int>();
  for (const auto& t : j.at("t_breakpoints")) atlas.t_breakpoints.push_back(parse_rational(t.get<std::string>()));
  for (const auto& jr : j.at("regions")) {
    Region r;
    r.name = jr.value("name", std::string{});
    for (const auto& c : jr.at("constraints")) {
      r.constraints.push_back({parse_constraint_kind(c.at("kind").get<std::string>()),
                               parse_constraint_op(c.at("op").get<std::string>()),
                               parse_rational(c.at("c").get<std::string>())});
    }
    const auto& kappa = jr.at("kappa");
    for (std::size_t i = 0; i < r.kappa.size(); ++i) r.kappa[i] = exact_const_from_json(kappa.at("k" + std::to_string(i + 1)));
    atlas.regions.push_back(std::move(r));
  }
  return atlas;
}

}  // namespace gaplab
