#include "spincalc/amplitude.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace spincalc {

ComplexScalar va_amplitude(const VaKinematics& k, const Couplings& c,
                           TermCounter* counter) {
  TermCounter local;
  TermCounter& tc = counter ? *counter : local;
  tc.chain_length = 1;  // one gamma slot per current

  // Lepton current psibar_e gamma_a (1 + gamma5) psi_nu: the single-gamma
  // chain with the + projector routes psibar_{e+} gamma_{a-} psi_{nu+},
  // and (1 + gamma5) = 2 P_+.
  const Vec2 e_p = plane_wave_spinor(k.e, +1).components();
  const Vec2 nu_p = plane_wave_spinor(k.nu, +1).components();
  const Vec2 n_p = plane_wave_spinor(k.n, +1).components();
  const Vec2 n_m = plane_wave_spinor(k.n, -1).components();
  const Vec2 p_p = plane_wave_spinor(k.p, +1).components();
  const Vec2 p_m = plane_wave_spinor(k.p, -1).components();

  // Hadron current split (g_V + g_A gamma5) = (g_V+g_A) P_+ + (g_V-g_A) P_-:
  // the P_+ piece routes through gamma^a_-, the P_- piece through gamma^a_+.
  // Both contracted pairs are then reduced by the delta identities.
  GammaPairTerm same;
  same.left_sign = -1;
  same.right_sign = -1;
  same.xbar = e_p;
  same.y = nu_p;
  same.zbar = p_p;
  same.w = n_p;

  GammaPairTerm opposite;
  opposite.left_sign = -1;
  opposite.right_sign = +1;
  opposite.xbar = e_p;
  opposite.y = nu_p;
  opposite.zbar = p_m;
  opposite.w = n_m;

  ComplexScalar reduced = (c.g_V + c.g_A) * contract_pair_identities(same, tc) +
                          (c.g_V - c.g_A) * contract_pair_identities(opposite, tc);
  return (2.0 * c.G_F / std::sqrt(2.0)) * reduced;
}

ComplexScalar va_amplitude_reference(const VaKinematics& k, const Couplings& c,
                                     const GammaSet& g) {
  const FourSpinor psi_nu = plane_wave_four_spinor(k.nu);
  const FourSpinor psi_n = plane_wave_four_spinor(k.n);
  const FourSpinor psi_p = plane_wave_four_spinor(k.p);
  const FourSpinor psi_e = plane_wave_four_spinor(k.e);

  const Vec4 re = adjoint(psi_e).row;
  const Vec4 rp = adjoint(psi_p).row;
  const Mat4 one_plus_g5 = Mat4::identity() + g.gamma5;
  const Mat4 v_minus_a = c.g_V * Mat4::identity() + c.g_A * g.gamma5;

  auto row_dot = [](const Vec4& r, const Vec4& v) {
    return r[0] * v[0] + r[1] * v[1] + r[2] * v[2] + r[3] * v[3];
  };

  ComplexScalar m = 0.0;
  for (int a = 0; a < 4; ++a) {
    ComplexScalar lepton = row_dot(re, (g.gamma[a] * one_plus_g5) * psi_nu.column());
    ComplexScalar hadron = row_dot(rp, (g.gamma_up(a) * v_minus_a) * psi_n.column());
    m += lepton * hadron;
  }
  return c.G_F / std::sqrt(2.0) * m;
}

std::vector<TermScanRow> term_count_scan(const std::vector<int>& chain_lengths,
                                         unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto rand_vec = [&] {
    return FourVector{dist(rng), dist(rng), dist(rng), dist(rng)};
  };
  auto rand_spinor = [&] {
    return Vec2{ComplexScalar(dist(rng), dist(rng)),
                ComplexScalar(dist(rng), dist(rng))};
  };

  std::vector<TermScanRow> rows;
  rows.reserve(chain_lengths.size());
  for (int n : chain_lengths) {
    if (n < 0) throw std::invalid_argument("term_count_scan: negative chain length");
    TermScanRow row;
    row.n = n;

    FourSpinor psi_f = FourSpinor::from_components(rand_spinor(), rand_spinor());
    FourSpinor psi_i = FourSpinor::from_components(rand_spinor(), rand_spinor());
    std::vector<FourVector> momenta(n);
    for (auto& p : momenta) p = rand_vec();

    // Direct path: route and evaluate, counting block products.
    TermCounter direct;
    if (n == 0) {
      ChiralChain chain;  // identity routing
      evaluate_chain_routed(psi_f, psi_i, chain, direct);
    } else {
      ChiralChain chain;
      for (const auto& p : momenta) chain.slots.push_back(SlashedSlot{p});
      chain.projector_sign = +1;
      evaluate_chain_routed(psi_f, psi_i, chain, direct);
    }
    row.direct_count = direct.contractions;

    // Trace path: the squared chain doubles the slots; every pairwise
    // metric contraction among them is an input of the trace expansion.
    std::vector<FourVector> doubled = momenta;
    doubled.insert(doubled.end(), momenta.rbegin(), momenta.rend());
    long long pair_contractions = 0;
    double sink = 0.0;
    for (std::size_t i = 0; i < doubled.size(); ++i)
      for (std::size_t j = i + 1; j < doubled.size(); ++j) {
        sink += minkowski_dot(doubled[i], doubled[j]);
        ++pair_contractions;
      }
    (void)sink;
    row.trace_count = (n == 0) ? 1 : pair_contractions;
    rows.push_back(row);
  }
  return rows;
}

double growth_exponent(const std::vector<TermScanRow>& rows, bool trace_column) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (r.n <= 0) continue;
    double x = std::log(double(r.n));
    double y = std::log(double(trace_column ? r.trace_count : r.direct_count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("growth_exponent: need at least two rows");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace spincalc
