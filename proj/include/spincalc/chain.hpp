#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "spincalc/dirac.hpp"
#include "spincalc/four_vector.hpp"

namespace spincalc {

/// One off-diagonal 2x2 block of a chiral 4x4 object, tagged with which
/// block it is.  sign +1 = upper-right, -1 = lower-left.
struct ChiralBlock {
  Mat2 m;
  int sign = +1;
};

/// Chiral blocks of the slashed momentum phat = p^a gamma_a.
ChiralBlock slashed_block(const FourVector& p, int block_sign);

/// A chain slot is a fixed gamma index or a slashed four-vector.
struct GammaSlot {
  int index = 0;  // tensor index 0..3, lower position
};
struct SlashedSlot {
  FourVector p;
};
using ChainSlot = std::variant<GammaSlot, SlashedSlot>;

/// psibar_f [slots...] (1/2)(1 + projector_sign gamma5) psi_i.
/// An absent projector means no chirality projector is inserted.
struct ChiralChain {
  std::vector<ChainSlot> slots;
  std::optional<int> projector_sign;
};

/// Work instrumentation, confined to one evaluation context.
struct TermCounter {
  long long contractions = 0;
  int chain_length = 0;
};

/// One routed term: which adjoint-side and in-side half-spinors pair with
/// the chain, and the block sign each slot routes through (strictly
/// alternating).  coefficient covers the projector normalization.
struct RoutedTerm {
  int psi_bar_sign = +1;             // psibar_{f +-} label: the f half conjugated
  int psi_in_sign = +1;              // psi_{i +-}: which half of psi_i enters
  std::vector<int> block_signs;      // per slot, left to right
  double coefficient = 1.0;
};

/// Selects the nonvanishing block routing(s) for the chain.  With a
/// projector there is exactly one term; without one, both projector
/// routings are returned (their sum is the identity insertion).
/// Throws std::invalid_argument for an empty chain carrying a projector.
std::vector<RoutedTerm> chirality_split(const ChiralChain& chain);

/// Evaluate the chain between four-spinors by the routed two-spinor block
/// products.  Counts one contraction per block product plus one for the
/// final spinor pairing.
ComplexScalar evaluate_chain_routed(const FourSpinor& psi_f,
                                    const FourSpinor& psi_i,
                                    const ChiralChain& chain,
                                    TermCounter& counter);

/// Same quantity with explicit 4x4 matrices (adjoint row times matrix
/// product times column); the independent check for the routing.
ComplexScalar evaluate_chain_dense(const FourSpinor& psi_f,
                                   const FourSpinor& psi_i,
                                   const ChiralChain& chain,
                                   const GammaSet& g);

/// A term carrying the contracted-pair structure
///   sum_a (xbar gamma_{a,left_sign} y) (zbar gamma^a_{right_sign} w).
/// When has_pair is false the term is a plain product of two fixed-block
/// bilinears and contract_pair_identities is the identity transform.
struct GammaPairTerm {
  bool has_pair = true;
  int left_sign = +1;
  int right_sign = -1;
  Vec2 xbar, y, zbar, w;
};

/// Applies the delta-contraction identities:
///   opposite signs: 2 (xbar.w)(zbar.y)
///   same signs:     2 [ (xbar.y)(zbar.w) - (xbar.w)(zbar.y) ]
/// reducing a summed gamma pair to products of two-spinor inner products.
/// Counts one contraction per inner product formed.
ComplexScalar contract_pair_identities(const GammaPairTerm& term,
                                       TermCounter& counter);

/// Exhaustive residual of the opposite-sign contraction identity over all
/// 16 index tuples, evaluated with the constructed blocks.
double identity_5a_residual();

/// Exhaustive residual of the same-sign identity.
double identity_5b_residual();

/// The epsilon form of the opposite-sign identity used in its proof, with
/// mixed epsilons read as deltas and the factor 2 of the block completeness
/// included.  Exhaustive over all 16 tuples.
double epsilon_identity_residual();

}  // namespace spincalc
