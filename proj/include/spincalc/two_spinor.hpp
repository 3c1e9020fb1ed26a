#pragma once

#include <stdexcept>

#include "spincalc/algebra.hpp"

namespace spincalc {

enum class Variance { upper, lower };
enum class Priming { unprimed, primed };

/// Lorentz two-spinor: two complex components tagged with index position.
/// The tags are contract checks, not part of the numeric payload.
struct TwoSpinor {
  ComplexScalar c0{};
  ComplexScalar c1{};
  Variance variance = Variance::upper;
  Priming priming = Priming::unprimed;

  Vec2 components() const { return {c0, c1}; }

  static TwoSpinor upper_unprimed(const Vec2& v) {
    return {v[0], v[1], Variance::upper, Priming::unprimed};
  }
  static TwoSpinor upper_primed(const Vec2& v) {
    return {v[0], v[1], Variance::upper, Priming::primed};
  }
};

/// The antisymmetric epsilon spinor, eps_{01} = +1.  The same component
/// matrix serves eps_{AB}, eps^{AB} and the primed copies.
struct Epsilon {
  Mat2 e;

  Epsilon() {
    e.e[0][1] = 1.0;
    e.e[1][0] = -1.0;
  }
};

inline const Epsilon& epsilon() {
  static const Epsilon eps;
  return eps;
}

/// Fixed module conventions (recorded constants):
///   raising    xi^A = eps^{AB} xi_B          (northwest-to-southeast)
///   lowering   xi_B = xi^A eps_{AB}
///   round trip raise(lower(xi)) = lower(raise(xi)) = +xi
///   eps . eps  = -I  as a component-matrix product
inline constexpr int kRaiseLowerRoundTripSign = +1;
inline constexpr int kEpsilonSquareSign = -1;

/// Component action of raising on a column: (xi_0, xi_1) -> (xi_1, -xi_0).
inline Vec2 eps_raise(const Vec2& v) { return epsilon().e * v; }

/// Component action of lowering on a column: (xi^0, xi^1) -> (-xi^1, xi^0).
inline Vec2 eps_lower(const Vec2& v) {
  const Mat2& E = epsilon().e;
  return {E.e[0][0] * v[0] + E.e[1][0] * v[1],
          E.e[0][1] * v[0] + E.e[1][1] * v[1]};
}

inline TwoSpinor raise_index(const TwoSpinor& xi) {
  if (xi.variance != Variance::lower)
    throw std::invalid_argument("raise_index: spinor already carries an upper index");
  Vec2 up = eps_raise({xi.c0, xi.c1});
  return {up[0], up[1], Variance::upper, xi.priming};
}

inline TwoSpinor lower_index(const TwoSpinor& xi) {
  if (xi.variance != Variance::upper)
    throw std::invalid_argument("lower_index: spinor already carries a lower index");
  Vec2 lo = eps_lower({xi.c0, xi.c1});
  return {lo[0], lo[1], Variance::lower, xi.priming};
}

/// Invariant contraction xi^A eta_A of an upper spinor against the lowered
/// form of another upper spinor of like priming.
inline ComplexScalar eps_contract(const TwoSpinor& xi_up, const TwoSpinor& eta_up) {
  if (xi_up.variance != Variance::upper || eta_up.variance != Variance::upper)
    throw std::invalid_argument("eps_contract expects two upper-index spinors");
  if (xi_up.priming != eta_up.priming)
    throw std::invalid_argument("eps_contract expects like-primed spinors");
  Vec2 eta_lo = eps_lower({eta_up.c0, eta_up.c1});
  return xi_up.c0 * eta_lo[0] + xi_up.c1 * eta_lo[1];
}

}  // namespace spincalc
