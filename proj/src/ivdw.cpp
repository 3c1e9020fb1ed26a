#include "spincalc/ivdw.hpp"

#include <cmath>
#include <stdexcept>

namespace spincalc {

namespace {

IvdwSymbols build_symbols() {
  const double r = 1.0 / std::sqrt(2.0);
  IvdwSymbols s;
  s.g[0].e = {{{r, 0.0}, {0.0, r}}};
  s.g[1].e = {{{0.0, r}, {r, 0.0}}};
  s.g[2].e = {{{0.0, ComplexScalar(0.0, r)}, {ComplexScalar(0.0, -r), 0.0}}};
  s.g[3].e = {{{r, 0.0}, {0.0, -r}}};
  s.sign = {+1, +1, -1, +1};
  return s;
}

}  // namespace

const IvdwSymbols& ivdw_symbols() {
  static const IvdwSymbols s = build_symbols();
  return s;
}

Mat2 vector_to_spinor(const FourVector& v) {
  const IvdwSymbols& s = ivdw_symbols();
  Mat2 m;
  for (int a = 0; a < 4; ++a) m = m + v[a] * s.g[a];
  return m;
}

FourVector spinor_to_vector(const Mat2& m) {
  if (!is_hermitian(m, 1e-10))
    throw std::invalid_argument(
        "spinor_to_vector: matrix is not Hermitian, no real vector encoding");
  const IvdwSymbols& s = ivdw_symbols();
  double c[4];
  for (int a = 0; a < 4; ++a)
    c[a] = (double(s.sign[a]) * contract(s.g[a], m)).real();
  return {c[0], c[1], c[2], c[3]};
}

std::uint64_t spinor_space_dimension(unsigned n) {
  if (n == 0)
    throw std::domain_error("spinor_space_dimension: n = 0 is undefined");
  if (n > 126)
    throw std::domain_error("spinor_space_dimension: result exceeds 64 bits");
  unsigned half = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
  return std::uint64_t{1} << half;
}

}  // namespace spincalc
