#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "spincalc/trace_oracle.hpp"

using namespace spincalc;

namespace {

std::mt19937_64 rng(1414213ULL);
std::uniform_real_distribution<double> unit(-1.0, 1.0);
std::uniform_real_distribution<double> pos(0.0, 1.0);

UnpolarizedState random_unpolarized() {
  double m = 0.1 + 1.9 * pos(rng);
  return {m + 3.0 * pos(rng), m, pos(rng) * M_PI, pos(rng) * 2.0 * M_PI};
}

}  // namespace

TEST_CASE("gamma_trace basics") {
  GammaSet g = build_gamma_set();
  CHECK(std::abs(gamma_trace({}) - ComplexScalar(4.0)) == 0.0);
  for (int a = 0; a < 4; ++a) {
    std::vector<Mat4> one{g.gamma[a]};
    CHECK(std::abs(gamma_trace(one)) < 1e-15);
  }
  // tr(gamma_a gamma_b) = 4 clifford_sign g_ab
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      std::vector<Mat4> two{g.gamma[a], g.gamma[b]};
      double want = (a == b) ? 4.0 * g.clifford_sign * kMetricDiag[a] : 0.0;
      CHECK(std::abs(gamma_trace(two) - ComplexScalar(want)) < 1e-13);
    }
}

TEST_CASE("odd gamma products are traceless") {
  GammaSet g = build_gamma_set();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        std::vector<Mat4> three{g.gamma[a], g.gamma[b], g.gamma[c]};
        CHECK(std::abs(gamma_trace(three)) < 1e-13);
      }
}

TEST_CASE("enumeration and trace methods agree") {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    UnpolarizedKinematics kin{random_unpolarized(), random_unpolarized(),
                              random_unpolarized(), random_unpolarized()};
    Couplings c{0.5 + pos(rng), unit(rng), unit(rng)};
    SpinSumResult en = spin_summed_squared(kin, c, SpinSumMethod::enumeration);
    SpinSumResult tr = spin_summed_squared(kin, c, SpinSumMethod::trace);
    CHECK(en.value >= 0.0);
    CHECK(tr.value >= -1e-10);
    double scale = std::max({1.0, en.value, tr.value});
    worst = std::max(worst, std::abs(en.value - tr.value) / scale);
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("spin sum vanishes with the coupling") {
  UnpolarizedKinematics kin{random_unpolarized(), random_unpolarized(),
                            random_unpolarized(), random_unpolarized()};
  Couplings c{0.0, 0.9, 1.1};
  CHECK(spin_summed_squared(kin, c, SpinSumMethod::enumeration).value == 0.0);
  CHECK(std::abs(spin_summed_squared(kin, c, SpinSumMethod::trace).value) <
        1e-20);
}

TEST_CASE("spin sum is invariant under a common azimuthal rotation") {
  UnpolarizedKinematics kin{random_unpolarized(), random_unpolarized(),
                            random_unpolarized(), random_unpolarized()};
  Couplings c{1.3, 0.6, -0.8};
  double before = spin_summed_squared(kin, c, SpinSumMethod::trace).value;
  const double shift = 1.234;
  for (UnpolarizedState* st : {&kin.nu, &kin.n, &kin.p, &kin.e})
    st->phi += shift;
  double after = spin_summed_squared(kin, c, SpinSumMethod::trace).value;
  CHECK(std::abs(after - before) / std::max(1.0, before) < 1e-12);
}

TEST_CASE("direct engine spin sum closes on both oracle methods") {
  for (int i = 0; i < 20; ++i) {
    UnpolarizedKinematics kin{random_unpolarized(), random_unpolarized(),
                              random_unpolarized(), random_unpolarized()};
    Couplings c{0.5 + pos(rng), unit(rng), unit(rng)};
    double engine_sum = 0.0;
    for (int snu : {+1, -1})
      for (int sn : {+1, -1})
        for (int sp : {+1, -1})
          for (int se : {+1, -1}) {
            VaKinematics k{kin.nu.with_helicity(snu), kin.n.with_helicity(sn),
                           kin.p.with_helicity(sp), kin.e.with_helicity(se)};
            engine_sum += std::norm(va_amplitude(k, c));
          }
    SpinSumResult en = spin_summed_squared(kin, c, SpinSumMethod::enumeration);
    SpinSumResult tr = spin_summed_squared(kin, c, SpinSumMethod::trace);
    double scale = std::max({1.0, en.value});
    CHECK(std::abs(engine_sum - en.value) / scale < 1e-10);
    CHECK(std::abs(engine_sum - tr.value) / scale < 1e-10);
  }
}

TEST_CASE("term counts are recorded per method") {
  UnpolarizedKinematics kin{random_unpolarized(), random_unpolarized(),
                            random_unpolarized(), random_unpolarized()};
  Couplings c{1.0, 1.0, 1.0};
  SpinSumResult en = spin_summed_squared(kin, c, SpinSumMethod::enumeration);
  SpinSumResult tr = spin_summed_squared(kin, c, SpinSumMethod::trace);
  CHECK(en.term_count == 16);   // one amplitude per helicity assignment
  CHECK(tr.term_count == 32);   // two traces per (a,b) pair
  CHECK(en.method == SpinSumMethod::enumeration);
  CHECK(tr.method == SpinSumMethod::trace);
}
