#pragma once

// Truncation points on the polar planes of outer principal vertices, edge
// midpoints, and perpendicular foot points of the orthoscheme.

#include <cmath>
#include <optional>

#include "hypack/error.hpp"
#include "hypack/lorentz.hpp"
#include "hypack/orthoscheme.hpp"

namespace hypack {

enum class PointTag { C, L, H, J, E, Q, K, F03, F12, Foot };

constexpr const char* to_string(PointTag t) {
  switch (t) {
    case PointTag::C: return "C";
    case PointTag::L: return "L";
    case PointTag::H: return "H";
    case PointTag::J: return "J";
    case PointTag::E: return "E";
    case PointTag::Q: return "Q";
    case PointTag::K: return "K";
    case PointTag::F03: return "F03";
    case PointTag::F12: return "F12";
    case PointTag::Foot: return "Foot";
  }
  return "?";
}

struct EssentialPoint {
  PointTag tag = PointTag::Foot;
  LorentzVec vec;
  double norm = 0.0;  ///< <vec, vec>

  static EssentialPoint make(PointTag tag, const LorentzVec& v) { return {tag, v, bilinear(v, v)}; }
};

/// C, L, H: where the edges A0A1, A0A2, A0A3 meet the polar plane of A0.
struct TruncationA0 {
  EssentialPoint c, l, h;
};

/// J, E, Q: where the edges A3A0, A3A1, A3A2 meet the polar plane of A3.
struct TruncationA3 {
  EssentialPoint j, e, q;
};

struct Midpoints {
  EssentialPoint f03, f12;
};

inline TruncationA0 truncation_points_a0(const GramPair& g, const Quad& a) {
  if (classify(a[0]) != PointClass::Outer) throw Error(ErrorCode::NotTruncated, "A0 is not an outer vertex");
  const double a00 = g.a(0, 0);
  return {EssentialPoint::make(PointTag::C, a[1] - (g.a(0, 1) / a00) * a[0]),
          EssentialPoint::make(PointTag::L, a[2] - (g.a(0, 2) / a00) * a[0]),
          EssentialPoint::make(PointTag::H, a[3] - (g.a(0, 3) / a00) * a[0])};
}

inline TruncationA3 truncation_points_a3(const GramPair& g, const Quad& a) {
  if (classify(a[3]) != PointClass::Outer) throw Error(ErrorCode::NotTruncated, "A3 is not an outer vertex");
  const double a33 = g.a(3, 3);
  return {EssentialPoint::make(PointTag::J, a[0] - (g.a(0, 3) / a33) * a[3]),
          EssentialPoint::make(PointTag::E, a[1] - (g.a(1, 3) / a33) * a[3]),
          EssentialPoint::make(PointTag::Q, a[2] - (g.a(2, 3) / a33) * a[3])};
}

/// Midpoints of A0A3 and A1A2; meaningful whatever the type of A0 and A3.
/// Relies on the vertices reproducing a_ij exactly (no renormalization).
inline Midpoints midpoints(const Quad& a) {
  return {EssentialPoint::make(PointTag::F03, a[0] + a[3]), EssentialPoint::make(PointTag::F12, a[1] + a[2])};
}

/// Midpoint K of A2Q, as the sum of the two unit time-like representatives.
inline EssentialPoint midpoint_K(const GramPair& g, const Quad& a, const LorentzVec& q) {
  if (classify(a[3]) != PointClass::Outer) throw Error(ErrorCode::NotTruncated, "K needs an outer A3");
  const double qq = bilinear(q, q);
  if (!(qq < 0.0) || !(g.a(2, 2) < 0.0)) throw Error(ErrorCode::NotProper, "A2 and Q must be proper to build K");
  return EssentialPoint::make(PointTag::K, a[2] / std::sqrt(-g.a(2, 2)) + q / std::sqrt(-qq));
}

/// Perpendicular foot of x on the plane with pole u.
inline LorentzVec foot_point(const LorentzVec& x, const LorentzVec& u) {
  const double uu = bilinear(u, u);
  if (std::abs(normalized_norm(u)) <= kClassifyEps)
    throw Error(ErrorCode::DegeneratePlane, "foot point onto a plane with <u,u> = 0");
  return x - (bilinear(x, u) / uu) * u;
}

/// Everything the density cases need about one orthoscheme, computed once.
/// Immutable after construction, so sharing across threads is safe.
struct Frame {
  OrthoParams params;
  GramPair g;
  Configuration config;
  Quad a;  ///< vertices A0..A3
  Quad b;  ///< face poles b^0..b^3
  Midpoints mid;
  std::optional<TruncationA0> trunc0;
  std::optional<TruncationA3> trunc3;
  std::optional<EssentialPoint> k;

  static Frame build(const OrthoParams& p) {
    Frame f{p, gram(p), configure(p), {}, {}, {}, std::nullopt, std::nullopt, std::nullopt};
    f.a = vertices(f.g);
    f.b = poles(f.g, f.a);
    f.mid = midpoints(f.a);
    if (f.config.a0_class == PointClass::Outer) f.trunc0 = truncation_points_a0(f.g, f.a);
    if (f.config.a3_class == PointClass::Outer) {
      f.trunc3 = truncation_points_a3(f.g, f.a);
      if (f.trunc3->q.norm < 0.0 && f.g.a(2, 2) < 0.0) f.k = midpoint_K(f.g, f.a, f.trunc3->q.vec);
    }
    return f;
  }
};

}  // namespace hypack
