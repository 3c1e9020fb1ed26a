#include "spincalc/dirac.hpp"

#include <cmath>
#include <stdexcept>

namespace spincalc {

FourSpinor::FourSpinor(const TwoSpinor& phi_, const TwoSpinor& pi_)
    : phi(phi_), pi(pi_) {
  if (phi.variance != Variance::upper || phi.priming != Priming::unprimed)
    throw std::invalid_argument("FourSpinor: phi must be an upper unprimed spinor");
  if (pi.variance != Variance::upper || pi.priming != Priming::primed)
    throw std::invalid_argument("FourSpinor: pi must be an upper primed spinor");
}

Mat2 chiral_gamma_block(int a, int block_sign) {
  const IvdwSymbols& s = ivdw_symbols();
  Mat2 top = std::sqrt(2.0) * s.g[a];
  if (block_sign > 0) return top;
  const Mat2& E = epsilon().e;
  return E * transpose(top) * transpose(E);
}

Mat2 chiral_gamma_block_up(int a, int block_sign) {
  Mat2 b = chiral_gamma_block(a, block_sign);
  return (a == 0) ? b : -1.0 * b;
}

GammaSet build_gamma_set() {
  GammaSet g;
  for (int a = 0; a < 4; ++a)
    g.gamma[a] = Mat4::from_blocks(Mat2::zero(), chiral_gamma_block(a, +1),
                                   chiral_gamma_block(a, -1), Mat2::zero());
  g.eta = Mat4::from_blocks(-kI * Mat2::identity(), Mat2::zero(), Mat2::zero(),
                            kI * Mat2::identity());
  g.gamma5 = kI * g.eta;

  // Measure the sign from {gamma_0, gamma_0} = sign * 2 g_00 I.
  Mat4 sq = g.gamma[0] * g.gamma[0];
  double s00 = sq.e[0][0].real();
  g.clifford_sign = (s00 > 0.0) ? +1 : -1;
  return g;
}

GammaAB build_gamma_ab(const GammaSet& g) {
  GammaAB out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      out.gamma_ab[a][b] =
          kGammaAbScale * (g.gamma[a] * g.gamma[b] - g.gamma[b] * g.gamma[a]);
  return out;
}

FourSpinor parity(const FourSpinor& psi) {
  return FourSpinor::from_components({psi.pi.c0, psi.pi.c1},
                                     {psi.phi.c0, psi.phi.c1});
}

const Mat4& adjoint_matrix() {
  static const Mat4 B = build_gamma_set().gamma[0];
  return B;
}

AdjointFourSpinor adjoint(const FourSpinor& psi) {
  AdjointFourSpinor out;
  out.row = {std::conj(psi.pi.c0), std::conj(psi.pi.c1),
             std::conj(psi.phi.c0), std::conj(psi.phi.c1)};
  return out;
}

namespace {

ComplexScalar row_mat_col(const Vec4& r, const Mat4& m, const Vec4& c) {
  Vec4 mc = m * c;
  return r[0] * mc[0] + r[1] * mc[1] + r[2] * mc[2] + r[3] * mc[3];
}

}  // namespace

BilinearSet bilinears(const FourSpinor& psi1, const FourSpinor& psi2) {
  const Mat2& E = epsilon().e;
  const Vec2 phi1 = psi1.phi.components(), pi1 = psi1.pi.components();
  const Vec2 phi2 = psi2.phi.components(), pi2 = psi2.pi.components();
  const Vec2 phi1b = conj(phi1), pi1b = conj(pi1);

  BilinearSet out;
  // Scalar convolutions pibar.phi and phibar.pi.
  ComplexScalar X = dot(pi1b, phi2);
  ComplexScalar Y = dot(phi1b, pi2);
  out.s = X + Y;
  out.p = kI * (X - Y);

  // Vector convolutions through the raised symbol blocks: the pi channel
  // uses the upper-right blocks, the phi channel the eps-sandwiched
  // lower-left blocks.
  for (int a = 0; a < 4; ++a) {
    ComplexScalar pi_term = contract(chiral_gamma_block_up(a, +1), outer(pi1b, pi2));
    ComplexScalar phi_term = contract(chiral_gamma_block_up(a, -1), outer(phi1b, phi2));
    out.j[a] = pi_term + phi_term;
    // Calibrated prefactor: the difference channel enters with the opposite
    // overall sign relative to the raw ordering (recorded constant -1).
    out.jt[a] = phi_term - pi_term;
  }

  // Tensor: symmetrized pair kernels; the epsilon lowers one leg of each
  // channel.  a^{ab} = i (unprimed-pair term + primed-pair term) / 2.
  const Vec2 phi2_lo = eps_lower(phi2);
  const Vec2 phi1b_lo = eps_lower(phi1b);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Mat2 Sa = chiral_gamma_block_up(a, +1), Sb = chiral_gamma_block_up(b, +1);
      Mat2 D = Sa * E * transpose(Sb) - Sb * E * transpose(Sa);
      Mat2 Dt = transpose(Sa) * transpose(E) * Sb - transpose(Sb) * transpose(E) * Sa;
      ComplexScalar t1 = contract(D, outer(pi1b, phi2_lo));
      ComplexScalar t2 = contract(Dt, outer(phi1b_lo, pi2));
      out.a[a][b] = 0.5 * kI * (t1 + t2);
    }
  }
  return out;
}

BilinearSet bilinears_reference(const FourSpinor& psi1, const FourSpinor& psi2,
                                const GammaSet& g) {
  const Vec4 r = adjoint(psi1).row;
  const Vec4 c = psi2.column();

  BilinearSet out;
  out.s = row_mat_col(r, Mat4::identity(), c);
  out.p = kI * row_mat_col(r, g.gamma5, c);
  for (int a = 0; a < 4; ++a) {
    out.j[a] = row_mat_col(r, g.gamma_up(a), c);
    out.jt[a] = row_mat_col(r, g.gamma_up(a) * g.gamma5, c);
  }
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Mat4 sigma = kSigmaScale *
                   (g.gamma_up(a) * g.gamma_up(b) - g.gamma_up(b) * g.gamma_up(a));
      out.a[a][b] = row_mat_col(r, sigma, c);
    }
  return out;
}

double clifford_residual(const GammaSet& g) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Mat4 anti = g.gamma[a] * g.gamma[b] + g.gamma[b] * g.gamma[a];
      double gab = (a == b) ? kMetricDiag[a] : 0.0;
      Mat4 expect = (double(g.clifford_sign) * 2.0 * gab) * Mat4::identity();
      worst = std::max(worst, max_abs(anti - expect));
    }
  return worst;
}

}  // namespace spincalc
