#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "spincalc/config.hpp"

using namespace spincalc;

namespace {

const char* kGoodConfig = R"({
  "process": "nu_n_to_p_e",
  "particles": {
    "nu": {"E": 1.5, "m": 0.0, "s": 1,  "eps": 1, "theta": 0.0,     "phi": 0.0},
    "n":  {"E": 2.0, "m": 0.9, "s": 1,  "eps": 1, "theta": 3.14159, "phi": 0.0},
    "p":  {"E": 2.2, "m": 1.0, "s": 1,  "eps": 1, "theta": 1.3,     "phi": 0.0},
    "e":  {"E": 1.8, "m": 0.3, "s": -1, "eps": 1, "theta": 0.7,     "phi": 0.0}
  },
  "couplings": {"G_F": 1.1, "g_V": 0.9, "g_A": 1.2},
  "tolerances": {"identity": 1e-12, "composed": 1e-10}
})";

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPINCALC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& text, const char* name) {
  std::string path = std::string("/tmp/") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("parse_run_config accepts a valid document") {
  RunConfig cfg = parse_run_config(kGoodConfig);
  CHECK(cfg.process == "nu_n_to_p_e");
  CHECK(cfg.particles.nu.m == 0.0);
  CHECK(cfg.particles.e.s == -1);
  CHECK(cfg.couplings.G_F == doctest::Approx(1.1));
  CHECK(cfg.tolerances.composed == doctest::Approx(1e-10));
}

TEST_CASE("config errors carry the field path") {
  nlohmann::json doc = nlohmann::json::parse(kGoodConfig);

  nlohmann::json no_e = doc;
  no_e["particles"]["nu"].erase("E");
  CHECK_THROWS_WITH_AS((void)parse_run_config(no_e.dump()),
                       "particles.nu.E: missing field", ConfigError);

  nlohmann::json bad_proc = doc;
  bad_proc["process"] = "mu_decay";
  CHECK_THROWS_AS((void)parse_run_config(bad_proc.dump()), ConfigError);

  nlohmann::json bad_s = doc;
  bad_s["particles"]["p"]["s"] = 2;
  CHECK_THROWS_AS((void)parse_run_config(bad_s.dump()), ConfigError);

  nlohmann::json bad_tol = doc;
  bad_tol["tolerances"]["identity"] = -1.0;
  CHECK_THROWS_AS((void)parse_run_config(bad_tol.dump()), ConfigError);

  CHECK_THROWS_AS((void)parse_run_config("{not json"), ConfigError);
}

TEST_CASE("invalid kinematics name the particle") {
  nlohmann::json doc = nlohmann::json::parse(kGoodConfig);
  doc["particles"]["n"]["E"] = 0.5;  // below the mass
  try {
    (void)parse_run_config(doc.dump());
    FAIL("expected ConfigError");
  } catch (const ConfigError& ex) {
    std::string msg = ex.what();
    CHECK(msg.find("particles.n") != std::string::npos);
    CHECK(msg.find("E < m") != std::string::npos);
  }
}

TEST_CASE("cli verify exits zero and exposes residuals as JSON") {
  RunResult r = run_cli("verify --json --seed 7");
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["checks"].contains("clifford-relation"));
  CHECK(doc["checks"]["clifford-relation"]["pass"] == true);
  CHECK(doc["checks"]["bilinear-equivalence"]["residual"].get<double>() < 1e-10);
}

TEST_CASE("cli verify fault injection fails naming the epsilon identity") {
  RunResult r = run_cli("verify --inject-epsilon-flip");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("epsilon-antisymmetry") != std::string::npos);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli verify output is deterministic for a fixed seed") {
  RunResult a = run_cli("verify --json --seed 42");
  RunResult b = run_cli("verify --json --seed 42");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == 0);
}

TEST_CASE("cli amplitude reports the matrix element and oracle agreement") {
  std::string path = write_temp(kGoodConfig, "spincalc_cfg_good.json");
  RunResult r = run_cli("amplitude --config " + path);
  CHECK(r.exit_code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.contains("amplitude"));
  CHECK(doc["amplitude"].contains("re"));
  CHECK(doc["amplitude"].contains("im"));
  CHECK(doc.contains("amplitude_sq"));
  CHECK(doc["spin_summed"].contains("enumeration"));
  CHECK(doc["spin_summed"].contains("trace"));
  CHECK(doc["residuals"]["engine_vs_reference"].get<double>() < 1e-10);
  CHECK(doc["residuals"]["enumeration_vs_trace"].get<double>() < 1e-10);

  RunResult again = run_cli("amplitude --config " + path);
  CHECK(again.out == r.out);  // byte-identical reruns
}

TEST_CASE("cli amplitude propagates config errors with exit code 2") {
  nlohmann::json doc = nlohmann::json::parse(kGoodConfig);
  doc["particles"]["e"]["E"] = 0.1;  // E < m
  std::string path = write_temp(doc.dump(), "spincalc_cfg_bad.json");
  RunResult r = run_cli("amplitude --config " + path);
  CHECK(r.exit_code == 2);

  RunResult missing = run_cli("amplitude --config /tmp/definitely_absent.json");
  CHECK(missing.exit_code == 2);

  RunResult no_opt = run_cli("amplitude");  // missing required --config
  CHECK(no_opt.exit_code == 2);

  nlohmann::json zero_g = nlohmann::json::parse(kGoodConfig);
  zero_g["couplings"]["G_F"] = 0.0;
  std::string zpath = write_temp(zero_g.dump(), "spincalc_cfg_zero.json");
  RunResult z = run_cli("amplitude --config " + zpath);
  CHECK(z.exit_code == 0);
  nlohmann::json zdoc = nlohmann::json::parse(z.out);
  CHECK(zdoc["amplitude"]["re"].get<double>() == 0.0);
  CHECK(zdoc["amplitude"]["im"].get<double>() == 0.0);
}

TEST_CASE("cli benchmark-terms emits the CSV contract") {
  RunResult r = run_cli("benchmark-terms --max-n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("n,direct_count,trace_count\n", 0) == 0);
  CHECK(r.out.find("\n2,3,6\n") != std::string::npos);
  CHECK(r.out.find("# direct_exponent,") != std::string::npos);
  CHECK(r.out.find("# trace_exponent,") != std::string::npos);

  RunResult again = run_cli("benchmark-terms --max-n 8");
  CHECK(again.out == r.out);  // deterministic CSV

  RunResult bad = run_cli("benchmark-terms --max-n 1");
  CHECK(bad.exit_code == 2);
}
