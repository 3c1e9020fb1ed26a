#include "spincalc/trace_oracle.hpp"

#include <cmath>

namespace spincalc {

ComplexScalar gamma_trace(std::span<const Mat4> product) {
  Mat4 m = Mat4::identity();
  for (const Mat4& f : product) m = m * f;
  return trace(m);
}

namespace {

Mat4 outer4(const Vec4& col, const Vec4& row) {
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.e[i][j] = col[i] * row[j];
  return m;
}

Mat4 spin_projector(const UnpolarizedState& st) {
  Mat4 p;
  for (int s : {+1, -1}) {
    FourSpinor psi = plane_wave_four_spinor(st.with_helicity(s));
    p = p + outer4(psi.column(), adjoint(psi).row);
  }
  return p;
}

}  // namespace

SpinSumResult spin_summed_squared(const UnpolarizedKinematics& kin,
                                  const Couplings& c, SpinSumMethod method) {
  SpinSumResult out;
  out.method = method;
  const GammaSet g = build_gamma_set();

  if (method == SpinSumMethod::enumeration) {
    double total = 0.0;
    for (int snu : {+1, -1})
      for (int sn : {+1, -1})
        for (int sp : {+1, -1})
          for (int se : {+1, -1}) {
            VaKinematics k{kin.nu.with_helicity(snu), kin.n.with_helicity(sn),
                           kin.p.with_helicity(sp), kin.e.with_helicity(se)};
            ComplexScalar m = va_amplitude_reference(k, c, g);
            total += std::norm(m);
            ++out.term_count;
          }
    out.value = total;
    return out;
  }

  const Mat4 B = adjoint_matrix();
  const Mat4 one_plus_g5 = Mat4::identity() + g.gamma5;
  const Mat4 v_minus_a = c.g_V * Mat4::identity() + c.g_A * g.gamma5;
  const Mat4 P_nu = spin_projector(kin.nu);
  const Mat4 P_n = spin_projector(kin.n);
  const Mat4 P_p = spin_projector(kin.p);
  const Mat4 P_e = spin_projector(kin.e);

  ComplexScalar total = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Mat4 gl_a = g.gamma[a] * one_plus_g5;
      Mat4 gl_b_bar = B * dagger(g.gamma[b] * one_plus_g5) * B;
      Mat4 gh_a = g.gamma_up(a) * v_minus_a;
      Mat4 gh_b_bar = B * dagger(g.gamma_up(b) * v_minus_a) * B;
      std::array<Mat4, 4> lepton{gl_a, P_nu, gl_b_bar, P_e};
      std::array<Mat4, 4> hadron{gh_a, P_n, gh_b_bar, P_p};
      total += gamma_trace(lepton) * gamma_trace(hadron);
      out.term_count += 2;  // two trace evaluations per (a,b)
    }
  out.value = (c.G_F * c.G_F / 2.0) * total.real();
  return out;
}

}  // namespace spincalc
