#include "spincalc/config.hpp"

#include <fstream>

#include "json.hpp"

namespace spincalc {

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path, const char* key) {
  if (!j.contains(key))
    throw ConfigError(path + "." + key + ": missing field");
  if (!j[key].is_number())
    throw ConfigError(path + "." + key + ": expected a number");
  return j[key].get<double>();
}

int require_sign(const json& j, const std::string& path, const char* key) {
  double v = require_number(j, path, key);
  if (v != 1.0 && v != -1.0)
    throw ConfigError(path + "." + key + ": must be +1 or -1");
  return int(v);
}

ParticleState parse_particle(const json& j, const std::string& name) {
  const std::string path = "particles." + name;
  if (!j.is_object()) throw ConfigError(path + ": expected an object");
  ParticleState st;
  st.E = require_number(j, path, "E");
  st.m = require_number(j, path, "m");
  st.s = require_sign(j, path, "s");
  st.eps = require_sign(j, path, "eps");
  st.theta = require_number(j, path, "theta");
  st.phi = require_number(j, path, "phi");
  try {
    validate(st);
  } catch (const std::exception& ex) {
    throw ConfigError(path + ": " + ex.what());
  }
  return st;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& ex) {
    throw ConfigError(std::string("config: ") + ex.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  RunConfig cfg;
  if (!doc.contains("process") || !doc["process"].is_string())
    throw ConfigError("process: missing or not a string");
  cfg.process = doc["process"].get<std::string>();
  if (cfg.process != "nu_n_to_p_e")
    throw ConfigError("process: unsupported tag '" + cfg.process + "'");

  if (!doc.contains("particles") || !doc["particles"].is_object())
    throw ConfigError("particles: missing or not an object");
  const json& parts = doc["particles"];
  for (const char* name : {"nu", "n", "p", "e"})
    if (!parts.contains(name))
      throw ConfigError(std::string("particles.") + name + ": missing field");
  cfg.particles.nu = parse_particle(parts["nu"], "nu");
  cfg.particles.n = parse_particle(parts["n"], "n");
  cfg.particles.p = parse_particle(parts["p"], "p");
  cfg.particles.e = parse_particle(parts["e"], "e");

  if (!doc.contains("couplings") || !doc["couplings"].is_object())
    throw ConfigError("couplings: missing or not an object");
  const json& cj = doc["couplings"];
  cfg.couplings.G_F = require_number(cj, "couplings", "G_F");
  cfg.couplings.g_V = require_number(cj, "couplings", "g_V");
  cfg.couplings.g_A = require_number(cj, "couplings", "g_A");

  if (doc.contains("tolerances")) {
    const json& tj = doc["tolerances"];
    if (!tj.is_object()) throw ConfigError("tolerances: expected an object");
    cfg.tolerances.identity = require_number(tj, "tolerances", "identity");
    cfg.tolerances.composed = require_number(tj, "tolerances", "composed");
    if (cfg.tolerances.identity <= 0.0 || cfg.tolerances.composed <= 0.0)
      throw ConfigError("tolerances: must be positive");
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_run_config(text);
}

}  // namespace spincalc
