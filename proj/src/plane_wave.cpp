#include "spincalc/plane_wave.hpp"

#include <cmath>
#include <stdexcept>

namespace spincalc {

void validate(const ParticleState& st) {
  if (st.s != +1 && st.s != -1)
    throw std::invalid_argument("ParticleState: helicity s must be +1 or -1");
  if (st.eps != +1 && st.eps != -1)
    throw std::invalid_argument("ParticleState: energy sign eps must be +1 or -1");
  if (st.m < 0.0) throw std::domain_error("ParticleState: mass must be >= 0");
  if (st.E < st.m)
    throw std::domain_error("ParticleState: E < m, square roots would be complex");
  if (!std::isfinite(st.E) || !std::isfinite(st.m) || !std::isfinite(st.theta) ||
      !std::isfinite(st.phi))
    throw std::domain_error("ParticleState: non-finite field");
}

Vec2 helicity_ket(double theta, double phi, int s) {
  const double c = std::cos(0.5 * theta);
  const double sn = std::sin(0.5 * theta);
  const ComplexScalar em = std::exp(ComplexScalar(0.0, -0.5 * phi));
  const ComplexScalar ep = std::exp(ComplexScalar(0.0, +0.5 * phi));
  if (s == +1) return {em * c, ep * sn};
  return {-em * sn, ep * c};
}

TwoSpinor plane_wave_spinor(const ParticleState& st, int block_sign) {
  validate(st);
  if (block_sign != +1 && block_sign != -1)
    throw std::invalid_argument("plane_wave_spinor: block_sign must be +1 or -1");
  const double eps = double(st.eps);
  const double radical = std::sqrt(st.E + eps * st.m) +
                         double(block_sign) * eps * double(st.s) *
                             std::sqrt(st.E - eps * st.m);
  const double prefactor = radical / std::sqrt(2.0);
  Vec2 ket = helicity_ket(st.theta, st.phi, st.s);
  Vec2 v = {prefactor * ket[0], prefactor * ket[1]};
  return (block_sign > 0) ? TwoSpinor::upper_unprimed(v)
                          : TwoSpinor::upper_primed(v);
}

FourSpinor plane_wave_four_spinor(const ParticleState& st) {
  return FourSpinor(plane_wave_spinor(st, +1), plane_wave_spinor(st, -1));
}

std::array<TwoSpinor, 4> helicity_kets(double theta_p, double theta_e) {
  auto mk = [](const Vec2& v) { return TwoSpinor::upper_unprimed(v); };
  return {mk({1.0, 0.0}), mk({0.0, 1.0}),
          mk({std::cos(0.5 * theta_p), std::sin(0.5 * theta_p)}),
          mk({-std::sin(0.5 * theta_e), std::cos(0.5 * theta_e)})};
}

}  // namespace spincalc
