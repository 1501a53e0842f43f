#include "psystem/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "psystem/error.hpp"

namespace psystem {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double require_number(const Json& j, const std::string& scope, const char* key) {
  if (!j.contains(key)) throw UsageError(scope + "." + key + ": missing");
  const auto& v = j.at(key);
  if (!v.is_number()) throw UsageError(scope + "." + key + ": expected a number");
  return v.get<double>();
}

double number_or(const Json& j, const std::string& scope, const char* key, double fallback) {
  return j.contains(key) ? require_number(j, scope, key) : fallback;
}

Json intervals(const std::vector<Interval>& xs) {
  Json out = Json::array();
  for (const auto& i : xs) out.push_back({i.lo, i.hi});
  return out;
}

} // namespace

Json to_json(const ModelSpec& m) {
  return {{"kind", std::string(to_string(m.kind))},
          {"rho0", m.rho0},
          {"mu", m.mu},
          {"lambda", m.lambda},
          {"f", m.f ? Json(*m.f) : Json(nullptr)}};
}

Json to_json(const RegionReport& r) {
  Json thresholds = Json::object();
  for (const auto& t : r.notes) thresholds[t.name] = number_or_null(t.value);
  return {{"model", to_json(r.model)},
          {"scan_range", {r.scan_range.lo, r.scan_range.hi}},
          {"hyperbolic", intervals(r.hyperbolic_intervals)},
          {"gnl", intervals(r.gnl_intervals)},
          {"thresholds", thresholds}};
}

Json to_json(const ShockSolution& s) {
  return {{"model", to_json(s.model)},     {"v0", s.v0},
          {"gamma_l", s.gamma_l},          {"sigma", number_or_null(s.sigma)},
          {"residual", s.rh_residual},     {"iterations", s.iterations},
          {"trivial", s.trivial},          {"warnings", s.warnings}};
}

Json to_json(const EntropyVerdict& v) {
  return {{"model", to_json(v.model)},
          {"gamma_l", v.gamma_l},
          {"margin", v.margin},
          {"holds", v.holds},
          {"s_e", v.s_e ? Json(*v.s_e) : Json(nullptr)}};
}

Json to_json(const ShockEstimate& e) {
  return {{"sigma_est", e.sigma}, {"gamma_left_est", e.gamma_left}, {"position", e.position}};
}

ModelSpec model_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("model: expected a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw UsageError("model.kind: expected one of stvk, kirchhoff_modified, ogden, blatz_ko, linear");
  }
  ModelSpec m;
  m.kind = model_kind_from_string(j.at("kind").get<std::string>());
  m.rho0 = number_or(j, "model", "rho0", 1.0);
  m.mu = require_number(j, "model", "mu");
  m.lambda = require_number(j, "model", "lambda");
  if (j.contains("f") && !j.at("f").is_null()) m.f = require_number(j, "model", "f");
  m.validate();
  return m;
}

SimConfig sim_config_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("config: expected a JSON object");
  if (!j.contains("model")) throw UsageError("config.model: missing");
  SimConfig c;
  c.model = model_from_json(j.at("model"));
  c.v0 = require_number(j, "config", "v0");
  c.domain_length = number_or(j, "config", "domain_length", c.domain_length);
  c.cfl = number_or(j, "config", "cfl", c.cfl);
  c.t_end = number_or(j, "config", "t_end", c.t_end);
  if (j.contains("cells")) {
    if (!j.at("cells").is_number_integer()) throw UsageError("config.cells: expected an integer");
    c.cells = j.at("cells").get<int>();
  }
  c.validate();
  return c;
}

Json load_json_argument(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && text_or_path[first] == '{') {
    text = text_or_path;
  } else {
    std::ifstream in(text_or_path);
    if (!in) throw UsageError("cannot open '" + text_or_path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

} // namespace psystem
