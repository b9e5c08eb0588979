#pragma once

#include <random>
#include <vector>

#include "hypack/hypack.hpp"

namespace hypack::test {

/// Hyperbolic triples of the default sweep, 3..9 plus inf on every axis.
inline const std::vector<OrthoParams>& sweep_params() {
  static const std::vector<OrthoParams> out = [] {
    std::vector<OrthoParams> v;
    const SweepSpec s = default_sweep();
    for (Order u : s.u_values)
      for (Order vv : s.v_values)
        for (Order w : s.w_values) {
          const auto p = OrthoParams::of(u, vv, w);
          if (p.is_hyperbolic()) v.push_back(p);
        }
    return v;
  }();
  return out;
}

inline OrthoParams P(int u, int v, int w) {
  const auto o = [](int n) { return n == 0 ? Order::infinity() : Order::finite(n); };
  return OrthoParams::of(o(u), o(v), o(w));
}

inline constexpr int kInf = 0;

/// Random time-like vector, scaled arbitrarily.
inline LorentzVec random_proper(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::uniform_real_distribution<double> scale(0.2, 5.0);
  const double x1 = d(rng), x2 = d(rng), x3 = d(rng);
  const double x0 = std::sqrt(1.0 + x1 * x1 + x2 * x2 + x3 * x3) * (1.0 + 0.5 * std::abs(d(rng)));
  return (rng() % 2 ? 1.0 : -1.0) * scale(rng) * LorentzVec(x0, x1, x2, x3);
}

inline LorentzVec random_vec(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  return LorentzVec(d(rng), d(rng), d(rng), d(rng));
}

}  // namespace hypack::test
