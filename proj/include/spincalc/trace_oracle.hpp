#pragma once

#include <span>
#include <string>
#include <vector>

#include "spincalc/amplitude.hpp"

namespace spincalc {

/// Trace of an ordered 4x4 matrix product; the empty product is the
/// identity, trace 4.
ComplexScalar gamma_trace(std::span<const Mat4> product);

enum class SpinSumMethod { trace, enumeration };

struct SpinSumResult {
  double value = 0.0;
  SpinSumMethod method = SpinSumMethod::enumeration;
  long long term_count = 0;
};

/// Kinematics of one leg without a helicity assignment.
struct UnpolarizedState {
  double E = 0.0;
  double m = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  ParticleState with_helicity(int s) const { return {E, m, s, +1, theta, phi}; }
};

struct UnpolarizedKinematics {
  UnpolarizedState nu, n, p, e;
};

/// Spin-summed |M|^2 over all 2^4 helicity assignments.
///
/// enumeration: sums |va_amplitude_reference|^2 directly.
/// trace: builds the spin projectors numerically as sums of outer products
/// psi psibar of the plane-wave four-spinors and evaluates
///   (G_F^2/2) sum_ab tr[Gam_a P_nu Gambar_b P_e] tr[Gam^a P_n Gambar^b P_p]
/// with Gambar = B Gam^dagger B.  The two methods share only the spinor
/// constructors.
SpinSumResult spin_summed_squared(const UnpolarizedKinematics& kin,
                                  const Couplings& c, SpinSumMethod method);

}  // namespace spincalc
