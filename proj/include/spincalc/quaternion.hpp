#pragma once

#include <stdexcept>

#include "spincalc/algebra.hpp"

namespace spincalc {

/// Real quaternion a + b i + c j + d k.  Components are real by
/// construction; the complex structure lives entirely in the 2x2 spin-matrix
/// representation.
struct Quaternion {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double norm() const { return a * a + b * b + c * c + d * d; }
};

/// Matrix representation  I a + i b + j c + k d  with the basis
///   I = [[1,0],[0,1]]   i = [[0,i],[i,0]]
///   j = [[0,-1],[1,0]]  k = [[i,0],[0,-i]]
/// giving [[a+id, -c+ib], [c+ib, a-id]].
inline Mat2 quat_to_matrix(const Quaternion& q) {
  Mat2 m;
  m.e[0][0] = ComplexScalar(q.a, q.d);
  m.e[0][1] = ComplexScalar(-q.c, q.b);
  m.e[1][0] = ComplexScalar(q.c, q.b);
  m.e[1][1] = ComplexScalar(q.a, -q.d);
  return m;
}

/// Inverse of quat_to_matrix.  Exact for matrices in the image of the
/// representation; a general 2x2 is projected onto it.
inline Quaternion quat_from_matrix(const Mat2& m) {
  Quaternion q;
  q.a = 0.5 * (m.e[0][0].real() + m.e[1][1].real());
  q.d = 0.5 * (m.e[0][0].imag() - m.e[1][1].imag());
  q.c = 0.5 * (m.e[1][0].real() - m.e[0][1].real());
  q.b = 0.5 * (m.e[1][0].imag() + m.e[0][1].imag());
  return q;
}

inline Quaternion quat_conjugate(const Quaternion& q) {
  return {q.a, -q.b, -q.c, -q.d};
}

/// Product defined through the matrix representation: the quaternion whose
/// matrix is matrix(p) * matrix(q).
inline Quaternion quat_product(const Quaternion& p, const Quaternion& q) {
  return quat_from_matrix(quat_to_matrix(p) * quat_to_matrix(q));
}

inline Quaternion quat_add(const Quaternion& p, const Quaternion& q) {
  return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}

/// True iff m is unimodular and unitary to within tol.
inline bool is_unitary_spin_matrix(const Mat2& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_unitary_spin_matrix: tol must be > 0");
  if (std::abs(det(m) - ComplexScalar(1.0)) > tol) return false;
  return max_abs(m * dagger(m) - Mat2::identity()) <= tol;
}

}  // namespace spincalc
