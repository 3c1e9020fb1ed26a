#include "spincalc/chain.hpp"

#include <cmath>
#include <stdexcept>

namespace spincalc {

ChiralBlock slashed_block(const FourVector& p, int block_sign) {
  Mat2 m;
  for (int a = 0; a < 4; ++a) m = m + p[a] * chiral_gamma_block(a, block_sign);
  return {m, block_sign};
}

namespace {

Mat2 slot_block(const ChainSlot& slot, int block_sign) {
  if (const auto* gs = std::get_if<GammaSlot>(&slot))
    return chiral_gamma_block(gs->index, block_sign);
  return slashed_block(std::get<SlashedSlot>(slot).p, block_sign).m;
}

Mat4 slot_dense(const ChainSlot& slot, const GammaSet& g) {
  if (const auto* gs = std::get_if<GammaSlot>(&slot)) return g.gamma[gs->index];
  const FourVector& p = std::get<SlashedSlot>(slot).p;
  Mat4 m;
  for (int a = 0; a < 4; ++a) m = m + p[a] * g.gamma[a];
  return m;
}

RoutedTerm route_for(const ChiralChain& chain, int proj, double coefficient) {
  RoutedTerm t;
  t.psi_in_sign = proj;
  t.coefficient = coefficient;
  // Walking right to left, a slot always maps the occupied half to the
  // other one through the block labelled by the output half.
  int half = proj;
  t.block_signs.assign(chain.slots.size(), 0);
  for (std::size_t k = chain.slots.size(); k-- > 0;) {
    t.block_signs[k] = -half;
    half = -half;
  }
  // The adjoint row pairs the conjugate of the opposite half against the
  // final vector, so the psibar_{f +-} label is the flip of the landing half.
  t.psi_bar_sign = -half;
  return t;
}

}  // namespace

std::vector<RoutedTerm> chirality_split(const ChiralChain& chain) {
  if (chain.projector_sign) {
    int proj = *chain.projector_sign;
    if (proj != +1 && proj != -1)
      throw std::invalid_argument("chirality_split: projector sign must be +1 or -1");
    if (chain.slots.empty())
      throw std::invalid_argument(
          "chirality_split: empty slot list with a chirality projector");
    // (1/2)(1 + proj gamma5) acting on the chiral pair keeps one half whole.
    return {route_for(chain, proj, 1.0)};
  }
  // No projector: identity insertion 1 = P_+ + P_-.
  return {route_for(chain, +1, 1.0), route_for(chain, -1, 1.0)};
}

ComplexScalar evaluate_chain_routed(const FourSpinor& psi_f,
                                    const FourSpinor& psi_i,
                                    const ChiralChain& chain,
                                    TermCounter& counter) {
  counter.chain_length = int(chain.slots.size());
  auto half_of = [](const FourSpinor& psi, int sign) {
    return sign > 0 ? psi.phi.components() : psi.pi.components();
  };
  ComplexScalar total = 0.0;
  for (const RoutedTerm& t : chirality_split(chain)) {
    Vec2 v = half_of(psi_i, t.psi_in_sign);
    for (std::size_t k = chain.slots.size(); k-- > 0;) {
      v = slot_block(chain.slots[k], t.block_signs[k]) * v;
      ++counter.contractions;
    }
    Vec2 fbar = half_of(psi_f, t.psi_bar_sign);
    total += t.coefficient * inner(fbar, v);
  }
  ++counter.contractions;  // final spinor pairing
  return total;
}

ComplexScalar evaluate_chain_dense(const FourSpinor& psi_f,
                                   const FourSpinor& psi_i,
                                   const ChiralChain& chain,
                                   const GammaSet& g) {
  Mat4 m = Mat4::identity();
  for (const ChainSlot& slot : chain.slots) m = m * slot_dense(slot, g);
  if (chain.projector_sign) {
    Mat4 proj = 0.5 * (Mat4::identity() + double(*chain.projector_sign) * g.gamma5);
    m = m * proj;
  }
  Vec4 r = adjoint(psi_f).row;
  Vec4 mc = m * psi_i.column();
  ComplexScalar acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += r[i] * mc[i];
  return acc;
}

ComplexScalar contract_pair_identities(const GammaPairTerm& term,
                                       TermCounter& counter) {
  if (!term.has_pair) {
    counter.contractions += 2;
    return inner(term.xbar, term.y) * inner(term.zbar, term.w);
  }
  if (term.left_sign != term.right_sign) {
    counter.contractions += 2;
    return 2.0 * inner(term.xbar, term.w) * inner(term.zbar, term.y);
  }
  counter.contractions += 4;
  return 2.0 * (inner(term.xbar, term.y) * inner(term.zbar, term.w) -
                inner(term.xbar, term.w) * inner(term.zbar, term.y));
}

namespace {

double pair_identity_residual(int left_sign, int right_sign) {
  double worst = 0.0;
  for (int al = 0; al < 2; ++al)
    for (int be = 0; be < 2; ++be)
      for (int ga = 0; ga < 2; ++ga)
        for (int de = 0; de < 2; ++de) {
          ComplexScalar lhs = 0.0;
          for (int a = 0; a < 4; ++a)
            lhs += chiral_gamma_block(a, left_sign).e[al][be] *
                   chiral_gamma_block_up(a, right_sign).e[ga][de];
          ComplexScalar rhs;
          if (left_sign != right_sign)
            rhs = 2.0 * double(al == de) * double(ga == be);
          else
            rhs = 2.0 * (double(al == be) * double(ga == de) -
                         double(al == de) * double(ga == be));
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

}  // namespace

double identity_5a_residual() {
  return std::max(pair_identity_residual(+1, -1), pair_identity_residual(-1, +1));
}

double identity_5b_residual() {
  return std::max(pair_identity_residual(+1, +1), pair_identity_residual(-1, -1));
}

double epsilon_identity_residual() {
  const Mat2& E = epsilon().e;
  double worst = 0.0;
  for (int a1 = 0; a1 < 2; ++a1)
    for (int b = 0; b < 2; ++b)
      for (int g = 0; g < 2; ++g)
        for (int d1 = 0; d1 < 2; ++d1) {
          ComplexScalar lhs = 0.0;
          for (int c = 0; c < 2; ++c)
            for (int c1 = 0; c1 < 2; ++c1)
              lhs += 2.0 * E.e[c1][a1] * double(c == b) * double(c == g) *
                     E.e[c1][d1];
          ComplexScalar rhs = 2.0 * double(a1 == d1) * double(g == b);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
  return worst;
}

}  // namespace spincalc
