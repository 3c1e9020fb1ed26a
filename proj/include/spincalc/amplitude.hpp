#pragma once

#include <vector>

#include "spincalc/chain.hpp"
#include "spincalc/plane_wave.hpp"

namespace spincalc {

struct Couplings {
  double G_F = 1.0;
  double g_V = 1.0;
  double g_A = 1.0;
};

/// The four external legs of nu + n -> p + e.
struct VaKinematics {
  ParticleState nu, n, p, e;
};

/// Matrix element of the V-A current product, evaluated directly in
/// two-spinor form: the chirality split routes each current through one
/// off-diagonal block and the contracted gamma pair is reduced by the delta
/// identities to products of two-spinor inner products.  Keeps the phase.
ComplexScalar va_amplitude(const VaKinematics& k, const Couplings& c,
                           TermCounter* counter = nullptr);

/// Same quantity assembled with explicit 4x4 matrices:
///   (G_F/sqrt2) sum_a [psibar_e gamma_a (1+gamma5) psi_nu]
///                     [psibar_p gamma^a (g_V + g_A gamma5) psi_n].
ComplexScalar va_amplitude_reference(const VaKinematics& k, const Couplings& c,
                                     const GammaSet& g);

struct TermScanRow {
  int n = 0;
  long long direct_count = 0;
  long long trace_count = 0;
};

/// Instrumented contraction counts for synthetic chains of n slots:
/// direct = routed block products plus the final pairing (n + 1);
/// trace  = pairwise metric contractions among the 2n slots of the squared
/// chain, counted by running the pair enumeration.  Values are not recorded,
/// only work counts.
std::vector<TermScanRow> term_count_scan(const std::vector<int>& chain_lengths,
                                         unsigned long long seed = 123456789ULL);

/// Log-log least-squares growth exponent of count versus n.
double growth_exponent(const std::vector<TermScanRow>& rows, bool trace_column);

}  // namespace spincalc
