#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace spincalc {

using ComplexScalar = std::complex<double>;
using Vec2 = std::array<ComplexScalar, 2>;
using Vec4 = std::array<ComplexScalar, 4>;

inline constexpr ComplexScalar kI{0.0, 1.0};

/// Exact-shape complex 2x2 matrix. Value type, no allocation.
struct Mat2 {
  std::array<std::array<ComplexScalar, 2>, 2> e{};

  static Mat2 identity() {
    Mat2 m;
    m.e[0][0] = 1.0;
    m.e[1][1] = 1.0;
    return m;
  }
  static Mat2 zero() { return Mat2{}; }

  ComplexScalar& operator()(int r, int c) { return e[r][c]; }
  const ComplexScalar& operator()(int r, int c) const { return e[r][c]; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
  return r;
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
  return r;
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
  return r;
}

inline Mat2 operator*(const ComplexScalar& s, const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = s * a.e[i][j];
  return r;
}

inline Mat2 operator*(double s, const Mat2& a) { return ComplexScalar(s) * a; }

inline Vec2 operator*(const Mat2& a, const Vec2& x) {
  return {a.e[0][0] * x[0] + a.e[0][1] * x[1],
          a.e[1][0] * x[0] + a.e[1][1] * x[1]};
}

inline ComplexScalar det(const Mat2& a) {
  return a.e[0][0] * a.e[1][1] - a.e[0][1] * a.e[1][0];
}

inline Mat2 transpose(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = a.e[j][i];
  return r;
}

inline Mat2 conj(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = std::conj(a.e[i][j]);
  return r;
}

inline Mat2 dagger(const Mat2& a) { return conj(transpose(a)); }

inline double max_abs(const Mat2& a) {
  double m = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m = std::max(m, std::abs(a.e[i][j]));
  return m;
}

inline bool is_hermitian(const Mat2& a, double tol) {
  return max_abs(a - dagger(a)) <= tol;
}

/// Exact-shape complex 4x4 matrix.
struct Mat4 {
  std::array<std::array<ComplexScalar, 4>, 4> e{};

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m.e[i][i] = 1.0;
    return m;
  }
  static Mat4 zero() { return Mat4{}; }

  /// Assemble from 2x2 blocks [[tl, tr], [bl, br]].
  static Mat4 from_blocks(const Mat2& tl, const Mat2& tr, const Mat2& bl,
                          const Mat2& br) {
    Mat4 m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m.e[i][j] = tl.e[i][j];
        m.e[i][j + 2] = tr.e[i][j];
        m.e[i + 2][j] = bl.e[i][j];
        m.e[i + 2][j + 2] = br.e[i][j];
      }
    return m;
  }

  Mat2 block(int row_half, int col_half) const {
    Mat2 b;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        b.e[i][j] = e[i + 2 * row_half][j + 2 * col_half];
    return b;
  }

  ComplexScalar& operator()(int r, int c) { return e[r][c]; }
  const ComplexScalar& operator()(int r, int c) const { return e[r][c]; }
};

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
  return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
  return r;
}

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      ComplexScalar acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a.e[i][k] * b.e[k][j];
      r.e[i][j] = acc;
    }
  return r;
}

inline Mat4 operator*(const ComplexScalar& s, const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.e[i][j] = s * a.e[i][j];
  return r;
}

inline Mat4 operator*(double s, const Mat4& a) { return ComplexScalar(s) * a; }

inline Vec4 operator*(const Mat4& a, const Vec4& x) {
  Vec4 r{};
  for (int i = 0; i < 4; ++i) {
    ComplexScalar acc = 0.0;
    for (int k = 0; k < 4; ++k) acc += a.e[i][k] * x[k];
    r[i] = acc;
  }
  return r;
}

inline Mat4 dagger(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.e[i][j] = std::conj(a.e[j][i]);
  return r;
}

inline ComplexScalar trace(const Mat4& a) {
  return a.e[0][0] + a.e[1][1] + a.e[2][2] + a.e[3][3];
}

inline double max_abs(const Mat4& a) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a.e[i][j]));
  return m;
}

// -- small vector helpers ---------------------------------------------------

/// Sesquilinear pairing conj(x).y.
inline ComplexScalar inner(const Vec2& x, const Vec2& y) {
  return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
}

inline ComplexScalar inner(const Vec4& x, const Vec4& y) {
  ComplexScalar acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

/// Bilinear (no conjugation) contraction x.y.
inline ComplexScalar dot(const Vec2& x, const Vec2& y) {
  return x[0] * y[0] + x[1] * y[1];
}

inline Vec2 conj(const Vec2& x) { return {std::conj(x[0]), std::conj(x[1])}; }

inline Vec2 operator*(const ComplexScalar& s, const Vec2& x) {
  return {s * x[0], s * x[1]};
}

inline Vec2 operator+(const Vec2& x, const Vec2& y) {
  return {x[0] + y[0], x[1] + y[1]};
}

/// Outer product x (x) y as a Mat2: result(i,j) = x[i]*y[j].
inline Mat2 outer(const Vec2& x, const Vec2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e[i][j] = x[i] * y[j];
  return r;
}

/// Entrywise sum of m .* w (no conjugation): the component contraction of a
/// symbol matrix against an outer-product tensor.
inline ComplexScalar contract(const Mat2& m, const Mat2& w) {
  ComplexScalar acc = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) acc += m.e[i][j] * w.e[i][j];
  return acc;
}

}  // namespace spincalc
