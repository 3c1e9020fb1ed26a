#pragma once

#include <array>

#include "spincalc/dirac.hpp"
#include "spincalc/two_spinor.hpp"

namespace spincalc {

/// Plane-wave particle data for longitudinal polarization.
struct ParticleState {
  double E = 0.0;       // energy
  double m = 0.0;       // mass, 0 <= m <= E
  int s = +1;           // helicity, +1 or -1
  int eps = +1;         // energy sign
  double theta = 0.0;   // polar angle
  double phi = 0.0;     // azimuth, principal half-angle branch on [0, 2pi)
};

/// Throws std::domain_error / std::invalid_argument on invalid data.
void validate(const ParticleState& st);

/// Unit helicity ket at (theta, phi):
///   s=+1: ( e^{-i phi/2} cos(theta/2),  e^{+i phi/2} sin(theta/2) )
///   s=-1: (-e^{-i phi/2} sin(theta/2),  e^{+i phi/2} cos(theta/2) )
/// For s=+1 and theta in [0,pi] this is exactly the half-angle form of the
/// sqrt(1 +- s cos theta) column; the s=-1 sign makes opposite helicities
/// orthonormal.
Vec2 helicity_ket(double theta, double phi, int s);

/// Plane-wave two-spinor block:
///   u_{+-} = (1/sqrt2) (sqrt(E + eps m) +- eps s sqrt(E - eps m)) * ket
/// block_sign selects +-.  The global normalization constant is 1/2 relative
/// to the unnormalized sqrt-column form (the worked-example normalization).
TwoSpinor plane_wave_spinor(const ParticleState& st, int block_sign);

/// Four-spinor with phi = u_+ and pi = u_-.
FourSpinor plane_wave_four_spinor(const ParticleState& st);

/// The four reference kets |s0..s3>:
///   |s0>=(1,0), |s1>=(0,1), |s2>=(cos tp/2, sin tp/2), |s3>=(-sin te/2, cos te/2).
std::array<TwoSpinor, 4> helicity_kets(double theta_p, double theta_e);

}  // namespace spincalc
