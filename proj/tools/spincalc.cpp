#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "spincalc/config.hpp"
#include "spincalc/verify.hpp"

namespace {

using spincalc::ComplexScalar;

/// 17 significant digits: enough to reproduce the double bit-exactly.
std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int cmd_verify(bool as_json, unsigned long long seed, bool inject_flip) {
  spincalc::VerifyOptions opt;
  opt.seed = seed;
  opt.inject_epsilon_flip = inject_flip;
  auto results = spincalc::run_verification_suite(opt);

  if (as_json) {
    std::printf("{\n  \"seed\": %llu,\n  \"checks\": {\n", seed);
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      std::printf("    \"%s\": {\"residual\": %s, \"tolerance\": %s, \"pass\": %s}%s\n",
                  r.name.c_str(), fmt17(r.residual).c_str(),
                  fmt17(r.tolerance).c_str(), r.pass ? "true" : "false",
                  i + 1 < results.size() ? "," : "");
    }
    std::printf("  },\n  \"pass\": %s\n}\n",
                spincalc::all_passed(results) ? "true" : "false");
  } else {
    for (const auto& r : results)
      std::printf("%-28s %s  residual=%s  tol=%s\n", r.name.c_str(),
                  r.pass ? "PASS" : "FAIL", fmt17(r.residual).c_str(),
                  fmt17(r.tolerance).c_str());
  }
  if (!spincalc::all_passed(results)) {
    for (const auto& r : results)
      if (!r.pass)
        std::fprintf(stderr, "verification failed: %s (residual %s > tol %s)\n",
                     r.name.c_str(), fmt17(r.residual).c_str(),
                     fmt17(r.tolerance).c_str());
    return 1;
  }
  return 0;
}

int cmd_amplitude(const std::string& config_path) {
  spincalc::RunConfig cfg = spincalc::load_run_config(config_path);
  const spincalc::GammaSet g = spincalc::build_gamma_set();

  spincalc::TermCounter counter;
  ComplexScalar m = spincalc::va_amplitude(cfg.particles, cfg.couplings, &counter);
  ComplexScalar m_ref =
      spincalc::va_amplitude_reference(cfg.particles, cfg.couplings, g);

  auto unpol = [](const spincalc::ParticleState& st) {
    return spincalc::UnpolarizedState{st.E, st.m, st.theta, st.phi};
  };
  spincalc::UnpolarizedKinematics kin{unpol(cfg.particles.nu),
                                      unpol(cfg.particles.n),
                                      unpol(cfg.particles.p),
                                      unpol(cfg.particles.e)};
  auto sum_enum = spincalc::spin_summed_squared(kin, cfg.couplings,
                                                spincalc::SpinSumMethod::enumeration);
  auto sum_trace = spincalc::spin_summed_squared(kin, cfg.couplings,
                                                 spincalc::SpinSumMethod::trace);

  double scale = std::max(1.0, std::abs(m_ref));
  double sum_scale = std::max({1.0, sum_enum.value, sum_trace.value});

  std::printf("{\n");
  std::printf("  \"process\": \"%s\",\n", cfg.process.c_str());
  std::printf("  \"amplitude\": {\"re\": %s, \"im\": %s},\n",
              fmt17(m.real()).c_str(), fmt17(m.imag()).c_str());
  std::printf("  \"amplitude_sq\": %s,\n", fmt17(std::norm(m)).c_str());
  std::printf("  \"spin_summed\": {\"enumeration\": %s, \"trace\": %s},\n",
              fmt17(sum_enum.value).c_str(), fmt17(sum_trace.value).c_str());
  std::printf("  \"residuals\": {\"engine_vs_reference\": %s, \"enumeration_vs_trace\": %s},\n",
              fmt17(std::abs(m - m_ref) / scale).c_str(),
              fmt17(std::abs(sum_enum.value - sum_trace.value) / sum_scale).c_str());
  std::printf("  \"term_counts\": {\"engine_contractions\": %lld, \"enumeration\": %lld, \"trace\": %lld}\n",
              counter.contractions, sum_enum.term_count, sum_trace.term_count);
  std::printf("}\n");
  return 0;
}

int cmd_benchmark_terms(int max_n) {
  if (max_n < 2) {
    std::fprintf(stderr, "benchmark-terms: --max-n must be >= 2\n");
    return 2;
  }
  std::vector<int> lengths;
  for (int n = 2; n <= max_n; n += 2) lengths.push_back(n);
  auto rows = spincalc::term_count_scan(lengths);

  std::printf("n,direct_count,trace_count\n");
  for (const auto& r : rows)
    std::printf("%d,%lld,%lld\n", r.n, r.direct_count, r.trace_count);
  if (rows.size() >= 2) {
    std::printf("# direct_exponent,%s\n",
                fmt17(spincalc::growth_exponent(rows, false)).c_str());
    std::printf("# trace_exponent,%s\n",
                fmt17(spincalc::growth_exponent(rows, true)).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-spinor matrix-element engine"};
  app.require_subcommand(1);

  bool json_out = false;
  bool inject_flip = false;
  unsigned long long seed = 123456789ULL;
  auto* verify = app.add_subcommand("verify", "run all verification suites");
  verify->add_flag("--json", json_out, "machine-readable residual map");
  verify->add_option("--seed", seed, "seed for randomized suites");
  verify->add_flag("--inject-epsilon-flip", inject_flip,
                   "debug: flip an epsilon sign to exercise failure paths")
      ->group("");  // hidden

  std::string config_path;
  unsigned long long amp_seed = 123456789ULL;
  auto* amplitude = app.add_subcommand("amplitude",
                                       "matrix element from a kinematics config");
  amplitude->add_option("--config", config_path, "JSON run configuration")
      ->required();
  amplitude->add_option("--seed", amp_seed, "seed (deterministic output)");

  int max_n = 16;
  auto* bench = app.add_subcommand("benchmark-terms",
                                   "term-count scaling of direct vs trace");
  bench->add_option("--max-n", max_n, "largest chain length (even)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage errors share the config-error exit code
  }

  try {
    if (app.got_subcommand(verify))
      return cmd_verify(json_out, seed, inject_flip);
    if (app.got_subcommand(amplitude)) return cmd_amplitude(config_path);
    if (app.got_subcommand(bench)) return cmd_benchmark_terms(max_n);
  } catch (const spincalc::ConfigError& ex) {
    std::fprintf(stderr, "config error: %s\n", ex.what());
    return 2;
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 0;
}
