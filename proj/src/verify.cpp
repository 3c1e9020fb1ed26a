#include "spincalc/verify.hpp"

#include <cmath>
#include <random>

#include "spincalc/quaternion.hpp"

namespace spincalc {

namespace {

double rel_diff(const ComplexScalar& got, const ComplexScalar& want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

struct Rng {
  std::mt19937_64 gen;
  std::uniform_real_distribution<double> unit{-1.0, 1.0};
  std::uniform_real_distribution<double> pos{0.0, 1.0};

  explicit Rng(unsigned long long seed) : gen(seed) {}

  double u() { return unit(gen); }
  ComplexScalar z() { return {unit(gen), unit(gen)}; }
  Vec2 spinor() { return {z(), z()}; }
  FourVector vec() { return {unit(gen), unit(gen), unit(gen), unit(gen)}; }
  ParticleState state(bool massless = false) {
    double m = massless ? 0.0 : 0.1 + 1.9 * pos(gen);
    double E = m + 3.0 * pos(gen);
    int s = pos(gen) < 0.5 ? +1 : -1;
    return {E, m, s, +1, pos(gen) * M_PI, pos(gen) * 2.0 * M_PI};
  }
};

}  // namespace

std::vector<CheckResult> run_verification_suite(const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  Rng rng(opt.seed);
  const GammaSet g = build_gamma_set();

  auto add = [&out](const std::string& name, double residual, double tol) {
    out.push_back({name, residual, tol, residual <= tol});
  };

  // --- epsilon identities (with optional fault injection) -----------------
  Mat2 E = epsilon().e;
  if (opt.inject_epsilon_flip) E.e[0][1] = -E.e[0][1];
  double antisym = std::abs(E.e[0][0]) + std::abs(E.e[1][1]) +
                   std::abs(E.e[0][1] + E.e[1][0]);
  add("epsilon-antisymmetry", antisym, opt.identity_tol);
  add("epsilon-delta-identity", max_abs(E * transpose(E) - Mat2::identity()),
      opt.identity_tol);
  {
    double worst = 0.0;
    for (int i = 0; i < 32; ++i) {
      Vec2 x = rng.spinor();
      TwoSpinor lo{x[0], x[1], Variance::lower, Priming::unprimed};
      TwoSpinor rt = lower_index(raise_index(lo));
      worst = std::max(worst, std::abs(rt.c0 - x[0]) + std::abs(rt.c1 - x[1]));
      TwoSpinor up{x[0], x[1], Variance::upper, Priming::primed};
      TwoSpinor rt2 = raise_index(lower_index(up));
      worst = std::max(worst, std::abs(rt2.c0 - x[0]) + std::abs(rt2.c1 - x[1]));
    }
    add("epsilon-roundtrip", worst, opt.identity_tol);
  }

  // --- gamma structure ------------------------------------------------------
  add("clifford-relation", clifford_residual(g), opt.identity_tol);
  {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      worst = std::max(worst, max_abs(g.gamma5 * g.gamma[a] + g.gamma[a] * g.gamma5));
    add("gamma5-anticommutation", worst, opt.identity_tol);
    add("gamma5-square", max_abs(g.gamma5 * g.gamma5 - Mat4::identity()),
        opt.identity_tol);
    add("gamma5-is-i-eta", max_abs(g.gamma5 - kI * g.eta), opt.identity_tol);
  }

  // --- IvdW symbols ----------------------------------------------------------
  {
    const IvdwSymbols& s = ivdw_symbols();
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        ComplexScalar got = contract(s.g[a], double(s.sign[b]) * s.g[b]);
        worst = std::max(worst, std::abs(got - ComplexScalar(a == b ? 1.0 : 0.0)));
      }
    add("ivdw-completeness", worst, opt.identity_tol);
  }
  {
    double worst_rt = 0.0, worst_norm = 0.0, worst_herm = 0.0, worst_null = 0.0;
    for (int i = 0; i < opt.ivdw_samples; ++i) {
      FourVector v = rng.vec();
      Mat2 m = vector_to_spinor(v);
      worst_herm = std::max(worst_herm, max_abs(m - dagger(m)));
      FourVector back = spinor_to_vector(m);
      for (int a = 0; a < 4; ++a)
        worst_rt = std::max(worst_rt, std::abs(back[a] - v[a]));
      worst_norm = std::max(
          worst_norm, std::abs(minkowski_norm(v) - 2.0 * det(m).real()));
      Vec2 kappa = rng.spinor();
      FourVector null_v = spinor_to_vector(outer(kappa, conj(kappa)));
      worst_null = std::max(worst_null, std::abs(minkowski_norm(null_v)));
    }
    add("ivdw-roundtrip", worst_rt, opt.identity_tol);
    add("ivdw-norm-correspondence", worst_norm, opt.identity_tol);
    add("ivdw-hermiticity", worst_herm, 1e-15);
    add("rank1-null-encoding", worst_null, opt.identity_tol);
  }

  // --- quaternions -------------------------------------------------------------
  {
    double worst_det = 0.0, worst_adj = 0.0, worst_unit = 0.0;
    for (int i = 0; i < opt.quaternion_samples; ++i) {
      Quaternion q{rng.u(), rng.u(), rng.u(), rng.u()};
      Mat2 m = quat_to_matrix(q);
      worst_det = std::max(worst_det, std::abs(det(m) - ComplexScalar(q.norm())));
      worst_adj = std::max(
          worst_adj, max_abs(m * quat_to_matrix(quat_conjugate(q)) -
                             q.norm() * Mat2::identity()));
      double n = std::sqrt(q.norm());
      if (n > 1e-3) {
        Quaternion u{q.a / n, q.b / n, q.c / n, q.d / n};
        if (!is_unitary_spin_matrix(quat_to_matrix(u), opt.identity_tol))
          worst_unit = 1.0;
      }
    }
    add("quaternion-det-norm", worst_det, opt.identity_tol);
    add("quaternion-adjoint-product", worst_adj, opt.identity_tol);
    add("quaternion-unit-spin-matrix", worst_unit, 0.5);
  }

  // --- contraction identities ---------------------------------------------------
  add("contraction-5a", identity_5a_residual(), opt.identity_tol);
  add("contraction-5b", identity_5b_residual(), opt.identity_tol);
  add("epsilon-proof-identity", epsilon_identity_residual(), opt.identity_tol);

  // --- bilinear equivalence and reality -------------------------------------------
  {
    double worst_eq = 0.0, worst_real = 0.0;
    for (int i = 0; i < opt.bilinear_pairs; ++i) {
      FourSpinor p1 = FourSpinor::from_components(rng.spinor(), rng.spinor());
      FourSpinor p2 = FourSpinor::from_components(rng.spinor(), rng.spinor());
      BilinearSet two = bilinears(p1, p2);
      BilinearSet ref = bilinears_reference(p1, p2, g);
      worst_eq = std::max(worst_eq, rel_diff(two.s, ref.s));
      worst_eq = std::max(worst_eq, rel_diff(two.p, ref.p));
      for (int a = 0; a < 4; ++a) {
        worst_eq = std::max(worst_eq, rel_diff(two.j[a], ref.j[a]));
        worst_eq = std::max(worst_eq, rel_diff(two.jt[a], ref.jt[a]));
        for (int b = 0; b < 4; ++b)
          worst_eq = std::max(worst_eq, rel_diff(two.a[a][b], ref.a[a][b]));
      }
      BilinearSet diag = bilinears(p1, p1);
      worst_real = std::max(worst_real, std::abs(diag.s.imag()));
      worst_real = std::max(worst_real, std::abs(diag.p.imag()));
      for (int a = 0; a < 4; ++a) {
        worst_real = std::max(worst_real, std::abs(diag.j[a].imag()));
        worst_real = std::max(worst_real, std::abs(diag.jt[a].imag()));
        for (int b = 0; b < 4; ++b) {
          worst_real = std::max(worst_real, std::abs(diag.a[a][b].imag()));
          worst_real =
              std::max(worst_real, std::abs(diag.a[a][b] + diag.a[b][a]));
        }
      }
    }
    add("bilinear-equivalence", worst_eq, opt.composed_tol);
    add("bilinear-reality", worst_real, opt.composed_tol);
  }

  // --- V-A engine against the oracles -----------------------------------------------
  {
    double worst = 0.0;
    for (int i = 0; i < opt.va_samples; ++i) {
      VaKinematics k{rng.state(true), rng.state(), rng.state(), rng.state()};
      Couplings c{0.5 + rng.pos(rng.gen), rng.u(), rng.u()};
      ComplexScalar direct = va_amplitude(k, c);
      ComplexScalar ref = va_amplitude_reference(k, c, g);
      worst = std::max(worst, rel_diff(direct, ref));
    }
    add("va-engine-vs-reference", worst, opt.composed_tol);
  }
  {
    double worst = 0.0;
    for (int i = 0; i < opt.spin_sum_samples; ++i) {
      auto us = [&] {
        ParticleState st = rng.state();
        return UnpolarizedState{st.E, st.m, st.theta, st.phi};
      };
      UnpolarizedKinematics kin{us(), us(), us(), us()};
      Couplings c{0.5 + rng.pos(rng.gen), rng.u(), rng.u()};
      SpinSumResult en = spin_summed_squared(kin, c, SpinSumMethod::enumeration);
      SpinSumResult tr = spin_summed_squared(kin, c, SpinSumMethod::trace);
      double scale = std::max({1.0, en.value, tr.value});
      worst = std::max(worst, std::abs(en.value - tr.value) / scale);
      // Direct-engine closure: the phase-preserving amplitude reproduces the
      // same spin sum.
      double engine_sum = 0.0;
      for (int snu : {+1, -1})
        for (int sn : {+1, -1})
          for (int sp : {+1, -1})
            for (int se : {+1, -1}) {
              VaKinematics k{kin.nu.with_helicity(snu), kin.n.with_helicity(sn),
                             kin.p.with_helicity(sp), kin.e.with_helicity(se)};
              engine_sum += std::norm(va_amplitude(k, c));
            }
      worst = std::max(worst, std::abs(engine_sum - tr.value) / scale);
    }
    add("spin-sum-closure", worst, opt.composed_tol);
  }

  return out;
}

}  // namespace spincalc
