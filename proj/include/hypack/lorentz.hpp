#pragma once

// Signature-(1,3) linear algebra for the projective (Cayley-Klein) model of
// hyperbolic 3-space. Vectors are projective: every predicate and distance
// here is invariant under nonzero rescaling of each argument.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <ostream>

#include <Eigen/Dense>

#include "hypack/error.hpp"

namespace hypack {

/// Tolerance on the normalized form value <x,x>/|x|^2 used by classify().
inline constexpr double kClassifyEps = 1e-10;

using Mat4 = Eigen::Matrix4d;

/// A point (or, in the dual role, a plane form) of real projective 3-space.
class LorentzVec {
 public:
  constexpr LorentzVec() = default;
  constexpr LorentzVec(double x0, double x1, double x2, double x3) : c_{x0, x1, x2, x3} {}

  constexpr double operator[](std::size_t i) const { return c_[i]; }
  constexpr double& operator[](std::size_t i) { return c_[i]; }

  constexpr const std::array<double, 4>& coords() const { return c_; }

  /// Squared Euclidean norm of the coordinates (not the Lorentz form).
  constexpr double coord_norm2() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
  }

  constexpr LorentzVec& operator+=(const LorentzVec& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
    return *this;
  }
  constexpr LorentzVec& operator-=(const LorentzVec& o) {
    for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  constexpr LorentzVec& operator*=(double s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend constexpr LorentzVec operator+(LorentzVec a, const LorentzVec& b) { return a += b; }
  friend constexpr LorentzVec operator-(LorentzVec a, const LorentzVec& b) { return a -= b; }
  friend constexpr LorentzVec operator*(double s, LorentzVec a) { return a *= s; }
  friend constexpr LorentzVec operator*(LorentzVec a, double s) { return a *= s; }
  friend constexpr LorentzVec operator/(LorentzVec a, double s) { return a *= 1.0 / s; }
  friend constexpr LorentzVec operator-(LorentzVec a) { return a *= -1.0; }

  friend std::ostream& operator<<(std::ostream& os, const LorentzVec& v) {
    return os << '(' << v.c_[0] << ", " << v.c_[1] << ", " << v.c_[2] << ", " << v.c_[3] << ')';
  }

 private:
  std::array<double, 4> c_{};
};

enum class PointClass { Proper, Boundary, Outer };

constexpr const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Proper: return "Proper";
    case PointClass::Boundary: return "Boundary";
    case PointClass::Outer: return "Outer";
  }
  return "?";
}

/// <x,y> = -x0 y0 + x1 y1 + x2 y2 + x3 y3
constexpr double bilinear(const LorentzVec& x, const LorentzVec& y) {
  return -x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

/// <x,x> / |x|^2, the scale-free quantity classify() thresholds.
inline double normalized_norm(const LorentzVec& x) {
  const double n2 = x.coord_norm2();
  if (std::sqrt(n2) < kClassifyEps) throw Error(ErrorCode::ZeroVector, "vector has no nonzero coordinate");
  return bilinear(x, x) / n2;
}

inline PointClass classify(const LorentzVec& x) {
  const double q = normalized_norm(x);
  if (q < -kClassifyEps) return PointClass::Proper;
  if (q > kClassifyEps) return PointClass::Outer;
  return PointClass::Boundary;
}

/// Hyperbolic distance between two proper points.
inline double dist_pp(const LorentzVec& x, const LorentzVec& y) {
  if (classify(x) != PointClass::Proper || classify(y) != PointClass::Proper)
    throw Error(ErrorCode::NotProper, "dist_pp needs two proper points");
  const double c = std::abs(bilinear(x, y)) / std::sqrt(bilinear(x, x) * bilinear(y, y));
  return std::acosh(std::max(c, 1.0));
}

/// Hyperbolic distance from a proper point to the plane with pole `u`.
inline double dist_pplane(const LorentzVec& x, const LorentzVec& u) {
  if (classify(x) != PointClass::Proper) throw Error(ErrorCode::NotProper, "dist_pplane needs a proper point");
  if (normalized_norm(u) <= kClassifyEps)
    throw Error(ErrorCode::DegeneratePlane, "plane form must satisfy <u,u> > 0");
  return std::asinh(std::abs(bilinear(x, u)) / std::sqrt(-bilinear(x, x) * bilinear(u, u)));
}

/// Generic inverse of a (symmetric) 4x4 matrix. Raises Singular when
/// |det| <= 1e-14 * (max row norm)^4.
inline Mat4 invert4(const Mat4& b) {
  const double row = b.rowwise().norm().maxCoeff();
  const double det = b.determinant();
  if (!(std::abs(det) > 1e-14 * std::pow(row, 4))) throw Error(ErrorCode::Singular, "matrix is numerically singular");
  Mat4 a = b.inverse();
  return 0.5 * (a + a.transpose());
}

}  // namespace hypack
