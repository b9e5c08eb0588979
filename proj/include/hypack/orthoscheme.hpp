#pragma once

// Coxeter-Schlaefli matrix of the orthoscheme W_{uvw}, its inverse, concrete
// vertex vectors and face poles, and the configuration of the principal
// vertices A0 and A3.

#include <array>
#include <cmath>
#include <compare>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "hypack/error.hpp"
#include "hypack/lorentz.hpp"

namespace hypack {

/// An extended natural number >= 3, or infinity. Carries the exact limit
/// values sin(pi/inf) = 0 and cos(pi/inf) = 1.
class Order {
 public:
  constexpr Order() = default;  ///< 3
  static Order finite(int n) {
    if (n < 3) throw Error(ErrorCode::BadInput, "orthoscheme parameters must be >= 3, got " + std::to_string(n));
    return Order(n);
  }
  static constexpr Order infinity() { return Order(0); }

  constexpr bool is_infinite() const { return n_ == 0; }
  /// Finite value; 0 for infinity.
  constexpr int value() const { return n_; }

  double angle() const { return is_infinite() ? 0.0 : std::numbers::pi / n_; }
  double sin_pi() const { return is_infinite() ? 0.0 : std::sin(std::numbers::pi / n_); }
  double cos_pi() const { return is_infinite() ? 1.0 : std::cos(std::numbers::pi / n_); }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(n_); }

  friend constexpr bool operator==(Order a, Order b) { return a.n_ == b.n_; }
  /// Infinity sorts after every finite value.
  friend constexpr std::strong_ordering operator<=>(Order a, Order b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return a.n_ <=> b.n_;
  }

 private:
  constexpr explicit Order(int n) : n_(n) {}
  int n_ = 3;
};

/// Parses "5", "inf", "∞".
inline Order parse_order(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity" || s == "∞") return Order::infinity();
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadInput, "not an orthoscheme parameter: '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::BadInput, "not an orthoscheme parameter: '" + s + "'");
  return Order::finite(n);
}

/// Sign of 1/p + 1/q - 1/2, computed exactly.
constexpr int angle_sum_sign(Order p, Order q) {
  if (p.is_infinite() && q.is_infinite()) return -1;
  if (p.is_infinite() || q.is_infinite()) {
    const int n = p.is_infinite() ? q.value() : p.value();
    return n < 2 ? 1 : (n == 2 ? 0 : -1);
  }
  // (2q + 2p - pq) / (2pq)
  const long long num = 2LL * q.value() + 2LL * p.value() - 1LL * p.value() * q.value();
  return (num > 0) - (num < 0);
}

struct OrthoParams {
  Order u;
  Order v;
  Order w;

  static OrthoParams of(Order u, Order v, Order w) { return OrthoParams{u, v, w}; }

  /// sin(pi/u) sin(pi/w) - cos(pi/v); negative exactly for hyperbolic W_{uvw}.
  double hyperbolicity() const { return u.sin_pi() * w.sin_pi() - v.cos_pi(); }
  /// The Euclidean group (4,3,4) sits on the boundary; rounding must not admit it.
  bool is_hyperbolic() const { return hyperbolicity() < -1e-12; }

  bool symmetric() const { return u == w; }
  OrthoParams mirrored() const { return OrthoParams{w, v, u}; }

  std::string str() const { return "(" + u.str() + "," + v.str() + "," + w.str() + ")"; }

  friend bool operator==(const OrthoParams&, const OrthoParams&) = default;
  friend auto operator<=>(const OrthoParams&, const OrthoParams&) = default;
};

/// The Coxeter-Schlaefli matrix (b^ij), its inverse (a_ij) and B = det(b^ij).
struct GramPair {
  Mat4 b;
  Mat4 a;
  double B = 0.0;
};

/// Builds (b^ij) from the cosines and (a_ij) from the closed form of the
/// inverse; the closed form is checked against a numeric inverse.
inline GramPair gram(const OrthoParams& p) {
  if (!p.is_hyperbolic())
    throw Error(ErrorCode::NotHyperbolic, p.str() + " does not satisfy sin(pi/u)sin(pi/w) < cos(pi/v)");
  const double cu = p.u.cos_pi(), cv = p.v.cos_pi(), cw = p.w.cos_pi();
  const double su2 = p.u.sin_pi() * p.u.sin_pi();
  const double sw2 = p.w.sin_pi() * p.w.sin_pi();
  const double cv2 = cv * cv;

  GramPair g;
  g.b << 1, -cu, 0, 0,
         -cu, 1, -cv, 0,
         0, -cv, 1, -cw,
         0, 0, -cw, 1;
  g.B = su2 * sw2 - cv2;
  g.a << sw2 - cv2, cu * sw2, cu * cv, cu * cv * cw,
         cu * sw2, sw2, cv, cw * cv,
         cu * cv, cv, su2, cw * su2,
         cu * cv * cw, cw * cv, cw * su2, su2 - cv2;
  g.a /= g.B;

  const Mat4 numeric = invert4(g.b);
  const double scale = std::max(1.0, g.a.cwiseAbs().maxCoeff());
  if ((numeric - g.a).cwiseAbs().maxCoeff() > 1e-9 * scale)
    throw Error(ErrorCode::Singular, "closed-form inverse disagrees with numeric inverse for " + p.str());
  return g;
}

using Quad = std::array<LorentzVec, 4>;

/// Vertex vectors a_0..a_3 with <a_i, a_j> = a_ij, obtained from an
/// eigen-factorization of (a_ij) with the single time-like direction first.
inline Quad vertices(const GramPair& g) {
  const Eigen::SelfAdjointEigenSolver<Mat4> eig(g.a);
  if (eig.info() != Eigen::Success) throw Error(ErrorCode::FactorizationFailed, "eigen-decomposition failed");
  const auto& lambda = eig.eigenvalues();  // ascending
  const double tol = 1e-12 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  if (!(lambda[0] < -tol && lambda[1] > tol))
    throw Error(ErrorCode::FactorizationFailed, "matrix (a_ij) is not of signature (1,3)");

  Eigen::Matrix4d coords;  // column i holds the coordinates of a_i
  for (int k = 0; k < 4; ++k) coords.row(k) = std::sqrt(std::abs(lambda[k])) * eig.eigenvectors().col(k).transpose();
  // A1 is never outer; orient it to the future sheet.
  if (coords(0, 1) < 0) coords = -coords;

  Quad out;
  for (int i = 0; i < 4; ++i) out[i] = LorentzVec(coords(0, i), coords(1, i), coords(2, i), coords(3, i));
  return out;
}

/// Poles of the faces: b^i = sum_j b^ij a_j, so <b^i, a_j> = delta_ij.
inline Quad poles(const GramPair& g, const Quad& a) {
  Quad out;
  for (int i = 0; i < 4; ++i) {
    LorentzVec acc;
    for (int j = 0; j < 4; ++j) acc += g.b(i, j) * a[j];
    out[i] = acc;
  }
  return out;
}

enum class Label { OneI, OneSI, OneII, TwoI, TwoII, TwoSII };

constexpr const char* to_string(Label l) {
  switch (l) {
    case Label::OneI: return "1.i";
    case Label::OneSI: return "1.s.i";
    case Label::OneII: return "1.ii";
    case Label::TwoI: return "2.i";
    case Label::TwoII: return "2.ii";
    case Label::TwoSII: return "2.s.ii";
  }
  return "?";
}

struct Configuration {
  PointClass a0_class = PointClass::Proper;
  PointClass a3_class = PointClass::Proper;
  bool symmetric = false;
  Label label = Label::OneI;
};

constexpr PointClass class_from_sign(int sign) {
  return sign > 0 ? PointClass::Proper : (sign == 0 ? PointClass::Boundary : PointClass::Outer);
}

/// Classifies A3 by 1/u + 1/v against 1/2 and A0 by 1/v + 1/w, exactly.
inline Configuration configure(const OrthoParams& p) {
  Configuration c;
  c.a3_class = class_from_sign(angle_sum_sign(p.u, p.v));
  c.a0_class = class_from_sign(angle_sum_sign(p.v, p.w));
  c.symmetric = p.symmetric();
  const bool a3_outer = c.a3_class == PointClass::Outer;
  const bool a0_outer = c.a0_class == PointClass::Outer;
  if (!a3_outer) {
    c.label = c.symmetric ? Label::OneSI : (a0_outer ? Label::OneII : Label::OneI);
  } else {
    c.label = c.symmetric ? Label::TwoSII : (a0_outer ? Label::TwoII : Label::TwoI);
  }
  return c;
}

}  // namespace hypack
