#pragma once

#include "spincalc/algebra.hpp"
#include "spincalc/four_vector.hpp"
#include "spincalc/ivdw.hpp"
#include "spincalc/two_spinor.hpp"

namespace spincalc {

/// Dirac four-spinor as a chiral pair (phi^A on top, pi^{A'} below).
/// Column layout is (phi0, phi1, pi0', pi1') and is never configurable.
struct FourSpinor {
  TwoSpinor phi;  // upper, unprimed
  TwoSpinor pi;   // upper, primed

  FourSpinor() : phi(TwoSpinor::upper_unprimed({0.0, 0.0})),
                 pi(TwoSpinor::upper_primed({0.0, 0.0})) {}
  FourSpinor(const TwoSpinor& phi_, const TwoSpinor& pi_);

  static FourSpinor from_components(const Vec2& phi, const Vec2& pi) {
    return FourSpinor(TwoSpinor::upper_unprimed(phi), TwoSpinor::upper_primed(pi));
  }

  Vec4 column() const {
    return {phi.c0, phi.c1, pi.c0, pi.c1};
  }
};

/// Adjoint row vector, layout (pibar_A, phibar_{A'}).
struct AdjointFourSpinor {
  Vec4 row{};
};

/// Chiral-representation gamma machinery, built once from the IvdW symbols.
///
/// Construction (all from the symbol table plus epsilon contractions):
///   upper-right block of gamma_a :  sqrt2 * g_a
///   lower-left  block of gamma_a :  eps-sandwich  E (sqrt2 g_a)^T E^T
///   eta    = diag(-i I, +i I),  gamma5 = i eta = diag(I, -I)
/// clifford_sign is measured from the constructed matrices; with this
/// construction it is +1 ({gamma_a, gamma_b} = +2 g_ab), the opposite overall
/// sign from the convention the source formalism prints.
struct GammaSet {
  std::array<Mat4, 4> gamma;  // lower tensor index
  Mat4 eta;
  Mat4 gamma5;
  int clifford_sign = 0;

  /// gamma^a = g^{ab} gamma_b.
  Mat4 gamma_up(int a) const {
    return (a == 0) ? gamma[0] : -1.0 * gamma[a];
  }
};

GammaSet build_gamma_set();

/// Antisymmetrized products gamma_ab = kGammaAbScale * [gamma_a, gamma_b],
/// block-diagonal by construction.
struct GammaAB {
  std::array<std::array<Mat4, 4>, 4> gamma_ab;
};

/// Recorded normalization of GammaAB relative to the plain commutator.
inline constexpr double kGammaAbScale = 0.5;

GammaAB build_gamma_ab(const GammaSet& g);

/// sigma^{ab} = kSigmaScale * [gamma^a, gamma^b]; the scale is the one-time
/// calibration constant that makes the tensor covariant agree between the
/// two-spinor and four-spinor evaluation paths (and makes it real on the
/// diagonal).
inline const ComplexScalar kSigmaScale{0.0, 0.5};

/// Chiral 2x2 blocks of gamma_a without forming 4x4 matrices:
/// block_sign +1 is the upper-right block (maps the pi half to the phi slot),
/// -1 the lower-left.  Lower tensor index.
Mat2 chiral_gamma_block(int a, int block_sign);

/// Same with the tensor index raised.
Mat2 chiral_gamma_block_up(int a, int block_sign);

/// Component swap (phi, pi) -> (pi, phi).
FourSpinor parity(const FourSpinor& psi);

/// Adjoint row (pibar_A, phibar_{A'}): conjugate each half and exchange
/// halves; equivalently conj(psi)^T * B with the recorded constant matrix
/// B = gamma_0.  The bar lands directly on the opposite-primed lower index
/// (no epsilon twist); this is the unique reading for which all five
/// bilinear covariants are real on the diagonal.
AdjointFourSpinor adjoint(const FourSpinor& psi);

/// The constant matrix B with adjoint(psi).row = conj(psi)^T B.
const Mat4& adjoint_matrix();

/// The five bilinear covariants.
struct BilinearSet {
  ComplexScalar s{};                       // scalar
  ComplexScalar p{};                       // pseudoscalar
  std::array<ComplexScalar, 4> j{};        // vector
  std::array<ComplexScalar, 4> jt{};       // pseudovector
  std::array<std::array<ComplexScalar, 4>, 4> a{};  // antisymmetric tensor
};

/// Two-spinor path: epsilon contractions and IvdW symbol blocks only, no 4x4
/// matrices.  Calibrated so every covariant matches bilinears_reference with
/// ratio exactly +1; the pseudovector convolution carries the one corrected
/// prefactor (the sum/difference channels swap relative to the raw gamma5
/// orientation).
BilinearSet bilinears(const FourSpinor& psi1, const FourSpinor& psi2);

/// Four-spinor path: adjoint(psi1) . {I, gamma5, gamma^a, gamma^a gamma5,
/// sigma^{ab}} . psi2 with explicit 4x4 matrices (p carries the conventional
/// factor i).
BilinearSet bilinears_reference(const FourSpinor& psi1, const FourSpinor& psi2,
                                const GammaSet& g);

/// max over (a,b) of || gamma_a gamma_b + gamma_b gamma_a
///                      - clifford_sign 2 g_ab I ||_max.
double clifford_residual(const GammaSet& g);

}  // namespace spincalc
