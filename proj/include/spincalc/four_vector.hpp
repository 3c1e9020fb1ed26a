#pragma once

#include <array>

namespace spincalc {

/// Real Minkowski vector, signature (+,-,-,-), natural units.
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int a) const {
    switch (a) {
      case 0: return t;
      case 1: return x;
      case 2: return y;
      default: return z;
    }
  }
};

inline constexpr std::array<double, 4> kMetricDiag{1.0, -1.0, -1.0, -1.0};

inline double minkowski_dot(const FourVector& u, const FourVector& v) {
  return u.t * v.t - u.x * v.x - u.y * v.y - u.z * v.z;
}

inline double minkowski_norm(const FourVector& v) { return minkowski_dot(v, v); }

}  // namespace spincalc
