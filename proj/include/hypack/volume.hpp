#pragma once

// Lobachevsky function, the volume of a (complete) orthoscheme in terms of
// its essential angles, and the volume of a hyperbolic ball.

#include <array>
#include <cmath>
#include <numbers>

#include "hypack/error.hpp"
#include "hypack/orthoscheme.hpp"

namespace hypack {

namespace detail {

// |B_2k| / (2k (2k+1)!) for k = 1..25.
inline constexpr std::array<double, 25> kClausenCoeffs = {
    1.3888888888888888889e-2,  6.9444444444444444444e-5,  7.8735197782816830436e-7,
    1.1482216343327454439e-8,  1.8978869988970999072e-10, 3.3873013709535212723e-12,
    6.3726364431831803966e-14, 1.2462059912950672305e-15, 2.5105444608999545509e-17,
    5.1782588060906235072e-19, 1.0887357368300848844e-20, 2.3257441143020872235e-22,
    5.0351952131473895608e-24, 1.1026499294381215333e-25, 2.4386585509007344735e-27,
    5.4401426788562523156e-29, 1.2228340131217352117e-30, 2.7672634689679505842e-32,
    6.3000905918320139487e-34, 1.4420868388418475211e-35, 3.3170939991595428044e-37,
    7.6639135579206578874e-39, 1.7778714733830657873e-40, 4.1396058982341373449e-42,
    9.6715570360811017926e-44,
};

/// Clausen function Cl2(t) for |t| <= pi:
/// t - t log|t| + sum_k |B_2k| t^(2k+1) / (2k (2k+1)!).
inline double clausen2_reduced(double t) {
  if (t == 0.0) return 0.0;
  const double t2 = t * t;
  double power = t * t2;
  double sum = 0.0;
  for (double c : kClausenCoeffs) {
    const double term = c * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    power *= t2;
  }
  return t - t * std::log(std::abs(t)) + sum;
}

}  // namespace detail

/// L(x) = -int_0^x log|2 sin t| dt, odd and pi-periodic.
inline double lobachevsky(double x) {
  constexpr double pi = std::numbers::pi;
  // reduce to [-pi/2, pi/2]
  double r = std::remainder(x, pi);
  return 0.5 * detail::clausen2_reduced(2.0 * r);
}

/// Essential dihedral angles alpha01 = pi/u, alpha12 = pi/v, alpha23 = pi/w.
struct Angles {
  double alpha01 = 0.0;
  double alpha12 = 0.0;
  double alpha23 = 0.0;

  static Angles of(const OrthoParams& p) { return {p.u.angle(), p.v.angle(), p.w.angle()}; }
};

/// The auxiliary angle theta in [0, pi/2) of the volume formula.
inline double theta(const Angles& ang) {
  const double s01 = std::sin(ang.alpha01), s23 = std::sin(ang.alpha23), c12 = std::cos(ang.alpha12);
  double radicand = c12 * c12 - s01 * s01 * s23 * s23;
  if (radicand < -1e-12) throw Error(ErrorCode::ThetaUndefined, "negative radicand; angles are not hyperbolic");
  if (radicand < 0.0) radicand = 0.0;
  const double denom = std::cos(ang.alpha01) * std::cos(ang.alpha23);
  if (!(denom > 0.0)) throw Error(ErrorCode::ThetaUndefined, "alpha01 and alpha23 must be below pi/2");
  return std::atan2(std::sqrt(radicand), denom);
}

inline double orthoscheme_volume(const Angles& ang) {
  constexpr double half_pi = std::numbers::pi / 2;
  const double t = theta(ang);
  const auto L = lobachevsky;
  return 0.25 * (L(ang.alpha01 + t) - L(ang.alpha01 - t) + L(half_pi + ang.alpha12 - t) +
                 L(half_pi - ang.alpha12 - t) + L(ang.alpha23 + t) - L(ang.alpha23 - t) + 2.0 * L(half_pi - t));
}

inline double orthoscheme_volume(const OrthoParams& p) { return orthoscheme_volume(Angles::of(p)); }

/// Volume pi (sinh 2r - 2r) of a ball of radius r.
inline double ball_volume(double r) {
  if (r < 0.0 || std::isnan(r)) throw Error(ErrorCode::NegativeRadius, "ball radius must be >= 0");
  const double x = 2.0 * r;
  if (x >= 1.0) return std::numbers::pi * (std::sinh(x) - x);
  // sinh x - x summed term by term to avoid cancellation
  const double x2 = x * x;
  double term = x * x2 / 6.0;
  double sum = 0.0;
  for (int k = 1; k < 40 && term > 1e-18 * sum; ++k) {
    sum += term;
    term *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
  }
  return std::numbers::pi * sum;
}

}  // namespace hypack
