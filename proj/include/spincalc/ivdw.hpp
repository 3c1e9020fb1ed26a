#pragma once

#include <cstdint>

#include "spincalc/algebra.hpp"
#include "spincalc/four_vector.hpp"

namespace spincalc {

/// Infeld-van der Waerden symbols in the standard Minkowski tetrad and
/// identity spin frame:
///   g_0 = I/sqrt2, g_1 = sx/sqrt2, g_2 = [[0,i],[-i,0]]/sqrt2, g_3 = sz/sqrt2
/// sign[a] records g^a_{AB'} = sign[a] * g_a^{AB'} with sign = (+,+,-,+);
/// the table is a consequence of metric raising plus double-epsilon lowering
/// and is asserted, not assumed.
struct IvdwSymbols {
  std::array<Mat2, 4> g;
  std::array<int, 4> sign;
};

const IvdwSymbols& ivdw_symbols();

/// v^{AA'} = sum_a v^a g_a.  Hermitian for real v.
Mat2 vector_to_spinor(const FourVector& v);

/// Inverse map via the sign table: v^a = sum_{AA'} m^{AA'} sign[a] g_a[AA'].
/// Throws std::invalid_argument if m is not Hermitian to within 1e-10.
/// Recorded orientation: (1/sqrt2)[[0,i],[-i,0]] maps to (0,0,+1,0).
FourVector spinor_to_vector(const Mat2& m);

/// Dimension of the spinor space over an n-dimensional base:
/// 2^(n/2) for even n, 2^((n-1)/2) for odd n.  n = 0 is undefined.
std::uint64_t spinor_space_dimension(unsigned n);

}  // namespace spincalc
