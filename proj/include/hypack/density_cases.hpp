#pragma once

// Ball packing and covering densities for the competitive ball centres of a
// complete orthoscheme. Each case carries the exact list of candidate
// distances whose minimum (packing) or maximum (covering) is the radius.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypack/error.hpp"
#include "hypack/essential_points.hpp"
#include "hypack/lorentz.hpp"
#include "hypack/orthoscheme.hpp"
#include "hypack/volume.hpp"

namespace hypack {

enum class Mode { Packing, Covering };

constexpr const char* to_string(Mode m) { return m == Mode::Packing ? "packing" : "covering"; }

inline Mode parse_mode(std::string_view s) {
  if (s == "packing") return Mode::Packing;
  if (s == "covering") return Mode::Covering;
  throw Error(ErrorCode::BadInput, "mode must be packing or covering, got '" + std::string(s) + "'");
}

enum class Centre { A3, A2, F03, F12, Q, J, E, K };

constexpr const char* to_string(Centre c) {
  switch (c) {
    case Centre::A3: return "A3";
    case Centre::A2: return "A2";
    case Centre::F03: return "F03";
    case Centre::F12: return "F12";
    case Centre::Q: return "Q";
    case Centre::J: return "J";
    case Centre::E: return "E";
    case Centre::K: return "K";
  }
  return "?";
}

/// Required relation of an angle sum (1/u+1/v or 1/v+1/w) to 1/2.
enum class Rel { Greater, GreaterEq, Less };

constexpr bool holds(Rel r, int sign) {
  switch (r) {
    case Rel::Greater: return sign > 0;
    case Rel::GreaterEq: return sign >= 0;
    case Rel::Less: return sign < 0;
  }
  return false;
}

/// Inequality regime on (1/u + 1/v, 1/v + 1/w).
struct Regime {
  Rel a3;
  Rel a0;

  bool admits(const OrthoParams& p) const {
    return holds(a3, angle_sum_sign(p.u, p.v)) && holds(a0, angle_sum_sign(p.v, p.w));
  }
};

/// Candidate distances from a ball centre, named after the printed segments.
enum class Dist {
  A3A2, A3A0, A3F03, A3F12, A3H, A3C,
  A2b2, A2A0, A2A3, A2F12, A2F03, A2L, A2C, A2H, A2Q, A2J,
  F03b0, F03A3, F03A2, F03J, F03Q,
  F12b1, F12b2, F12A3, F12a3, F12J, F12Q,
  QA2, QE, QC_half, QF03, QF12,
};

/// Named points and planes of a Frame.
enum class Site { A0, A1, A2, A3, F03, F12, C, L, H, J, E, Q, K, Plane_b0, Plane_b1, Plane_b2, Plane_b3, Plane_a3 };

enum class DistKind { PointPoint, PointPlane, HalfPointPoint };

struct DistSpec {
  Dist id;
  std::string_view name;
  Site from;
  Site to;
  DistKind kind;
};

inline constexpr std::array<DistSpec, 32> kDistSpecs = {{
    {Dist::A3A2, "A3A2", Site::A3, Site::A2, DistKind::PointPoint},
    {Dist::A3A0, "A3A0", Site::A3, Site::A0, DistKind::PointPoint},
    {Dist::A3F03, "A3F03", Site::A3, Site::F03, DistKind::PointPoint},
    {Dist::A3F12, "A3F12", Site::A3, Site::F12, DistKind::PointPoint},
    {Dist::A3H, "A3H", Site::A3, Site::H, DistKind::PointPoint},
    {Dist::A3C, "A3C", Site::A3, Site::C, DistKind::PointPoint},
    {Dist::A2b2, "A2b2", Site::A2, Site::Plane_b2, DistKind::PointPlane},
    {Dist::A2A0, "A2A0", Site::A2, Site::A0, DistKind::PointPoint},
    {Dist::A2A3, "A2A3", Site::A2, Site::A3, DistKind::PointPoint},
    {Dist::A2F12, "A2F12", Site::A2, Site::F12, DistKind::PointPoint},
    {Dist::A2F03, "A2F03", Site::A2, Site::F03, DistKind::PointPoint},
    {Dist::A2L, "A2L", Site::A2, Site::L, DistKind::PointPoint},
    {Dist::A2C, "A2C", Site::A2, Site::C, DistKind::PointPoint},
    {Dist::A2H, "A2H", Site::A2, Site::H, DistKind::PointPoint},
    {Dist::A2Q, "A2Q", Site::A2, Site::Q, DistKind::PointPoint},
    {Dist::A2J, "A2J", Site::A2, Site::J, DistKind::PointPoint},
    {Dist::F03b0, "F03b0", Site::F03, Site::Plane_b0, DistKind::PointPlane},
    {Dist::F03A3, "F03A3", Site::F03, Site::A3, DistKind::PointPoint},
    {Dist::F03A2, "F03A2", Site::F03, Site::A2, DistKind::PointPoint},
    {Dist::F03J, "F03J", Site::F03, Site::J, DistKind::PointPoint},
    {Dist::F03Q, "F03Q", Site::F03, Site::Q, DistKind::PointPoint},
    {Dist::F12b1, "F12b1", Site::F12, Site::Plane_b1, DistKind::PointPlane},
    {Dist::F12b2, "F12b2", Site::F12, Site::Plane_b2, DistKind::PointPlane},
    {Dist::F12A3, "F12A3", Site::F12, Site::A3, DistKind::PointPoint},
    {Dist::F12a3, "F12a3", Site::F12, Site::Plane_a3, DistKind::PointPlane},
    {Dist::F12J, "F12J", Site::F12, Site::J, DistKind::PointPoint},
    {Dist::F12Q, "F12Q", Site::F12, Site::Q, DistKind::PointPoint},
    {Dist::QA2, "QA2", Site::Q, Site::A2, DistKind::PointPoint},
    {Dist::QE, "QE", Site::Q, Site::E, DistKind::PointPoint},
    {Dist::QC_half, "QC/2", Site::Q, Site::C, DistKind::HalfPointPoint},
    {Dist::QF03, "QF03", Site::Q, Site::F03, DistKind::PointPoint},
    {Dist::QF12, "QF12", Site::Q, Site::F12, DistKind::PointPoint},
}};

inline const DistSpec& spec_of(Dist d) { return kDistSpecs[static_cast<std::size_t>(d)]; }

/// The vector of a named site, or nullopt when the site does not exist for
/// this orthoscheme (e.g. C when A0 is not outer).
inline std::optional<LorentzVec> site(const Frame& f, Site s) {
  switch (s) {
    case Site::A0: return f.a[0];
    case Site::A1: return f.a[1];
    case Site::A2: return f.a[2];
    case Site::A3: return f.a[3];
    case Site::F03: return f.mid.f03.vec;
    case Site::F12: return f.mid.f12.vec;
    case Site::C: return f.trunc0 ? std::optional(f.trunc0->c.vec) : std::nullopt;
    case Site::L: return f.trunc0 ? std::optional(f.trunc0->l.vec) : std::nullopt;
    case Site::H: return f.trunc0 ? std::optional(f.trunc0->h.vec) : std::nullopt;
    case Site::J: return f.trunc3 ? std::optional(f.trunc3->j.vec) : std::nullopt;
    case Site::E: return f.trunc3 ? std::optional(f.trunc3->e.vec) : std::nullopt;
    case Site::Q: return f.trunc3 ? std::optional(f.trunc3->q.vec) : std::nullopt;
    case Site::K: return f.k ? std::optional(f.k->vec) : std::nullopt;
    case Site::Plane_b0: return f.b[0];
    case Site::Plane_b1: return f.b[1];
    case Site::Plane_b2: return f.b[2];
    case Site::Plane_b3: return f.b[3];
    case Site::Plane_a3: return f.config.a3_class == PointClass::Outer ? std::optional(f.a[3]) : std::nullopt;
  }
  return std::nullopt;
}

/// cosh of a candidate distance by its closed form in a_ij, B and the
/// trigonometric values of pi/u, pi/v, pi/w.
inline double closed_form_cosh(Dist d, const Frame& f) {
  const Mat4& a = f.g.a;
  const double B = f.g.B;
  const double su = f.params.u.sin_pi(), cu = f.params.u.cos_pi();
  const double sv = f.params.v.sin_pi(), cv = f.params.v.cos_pi();
  const double su2 = su * su;
  const auto sq = [](double x) { return std::sqrt(x); };
  switch (d) {
    case Dist::A3A2:
    case Dist::A2A3: return -a(2, 3) / sq(a(2, 2) * a(3, 3));
    case Dist::A3A0: return -a(0, 3) / sq(a(0, 0) * a(3, 3));
    case Dist::A3F03:
    case Dist::F03A3: return sq(a(0, 3) / (2 * a(3, 3)) + 0.5);
    case Dist::A3F12:
    case Dist::F12A3: return -(a(1, 3) + a(2, 3)) / sq(2 * a(3, 3) * (a(1, 2) + a(2, 2)));
    case Dist::A3H: return sq(1 - a(0, 3) * a(0, 3) / (a(0, 0) * a(3, 3)));
    case Dist::A3C:
      return (a(0, 1) * a(0, 3) - a(0, 0) * a(1, 3)) / sq(a(0, 0) * a(3, 3) * (a(1, 1) * a(0, 0) - a(0, 1) * a(0, 1)));
    case Dist::A2b2: return sq(1 - 1 / a(2, 2));
    case Dist::A2A0: return -a(0, 2) / sq(a(0, 0) * a(2, 2));
    case Dist::A2F12: return sq(a(1, 2) / (2 * a(2, 2)) + 0.5);
    case Dist::A2F03:
    case Dist::F03A2: return -(a(0, 2) + a(2, 3)) / sq(2 * a(2, 2) * (a(3, 3) + a(0, 3)));
    case Dist::A2L: return sq(1 - a(0, 2) * a(0, 2) / (a(0, 0) * a(2, 2)));
    case Dist::A2C:
      return (a(0, 1) * a(0, 2) - a(1, 2) * a(0, 0)) / sq(a(0, 0) * a(2, 2) * (a(1, 1) * a(0, 0) - a(0, 1) * a(0, 1)));
    case Dist::A2H:
      return (a(0, 2) * a(0, 3) - a(2, 3) * a(0, 0)) / sq(a(0, 0) * a(2, 2) * (a(3, 3) * a(0, 0) - a(0, 3) * a(0, 3)));
    case Dist::A2Q:
    case Dist::QA2: return 1 / sq(a(3, 3));
    case Dist::A2J:
      return (a(0, 3) * a(2, 3) - a(0, 2) * a(3, 3)) / sq(a(3, 3) * a(2, 2) * (a(3, 3) * a(0, 0) - a(0, 3) * a(0, 3)));
    case Dist::F03b0: return sq(1 + (cv - su2) / (2 * (1 - cv)));
    case Dist::F03J: return sv / sq(2 * B * a(3, 3) * (a(3, 3) + a(0, 3)));
    case Dist::F03Q:
    case Dist::QF03: return (cu / su) * cv / sq(2 * B * a(3, 3) * (a(3, 3) + a(0, 3)));
    case Dist::F12b1:
    case Dist::F12b2: return sq(1 + (cv - su2) / 2);
    case Dist::F12a3: return sq(1 + cu * cu * (cv + su2) / (2 * (cv * cv - su2)));
    case Dist::F12J: return cu * (1 + cv) / (sv * sq(2 * a(3, 3) * (cv + su2)));
    case Dist::F12Q:
    case Dist::QF12: return sq((cv + su2) / (2 * a(3, 3) * su2));
    case Dist::QE: return cv / su;
    // half-angle form: already cosh(QC / 2)
    case Dist::QC_half: return sq(0.5 + a(1, 2) / (2 * a(2, 2) * a(3, 3)));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

/// Generic route: the same distance measured on the constructed points.
inline double oracle_distance(Dist d, const Frame& f) {
  const DistSpec& s = spec_of(d);
  const auto from = site(f, s.from);
  const auto to = site(f, s.to);
  if (!from || !to) throw Error(ErrorCode::CaseInapplicable, std::string(s.name) + " needs a site this orthoscheme lacks");
  switch (s.kind) {
    case DistKind::PointPoint: return dist_pp(*from, *to);
    case DistKind::PointPlane: return dist_pplane(*from, *to);
    case DistKind::HalfPointPoint: return 0.5 * dist_pp(*from, *to);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

/// True when the far end of the segment is an ideal point, i.e. the
/// distance is infinite.
inline bool reaches_boundary(Dist d, const Frame& f) {
  const DistSpec& s = spec_of(d);
  if (s.kind == DistKind::PointPlane) return false;
  const auto to = site(f, s.to);
  return to && classify(*to) == PointClass::Boundary;
}

struct CentreCase {
  std::string_view id;
  Centre centre;
  bool requires_symmetric;
  bool requires_a3_outer;
  bool requires_a0_outer;
  Regime packing_regime;
  Regime covering_regime;
  std::span<const Dist> packing;
  std::span<const Dist> covering;

  const Regime& regime(Mode m) const { return m == Mode::Packing ? packing_regime : covering_regime; }
  std::span<const Dist> candidates(Mode m) const { return m == Mode::Packing ? packing : covering; }
};

namespace detail {
using enum Dist;
inline constexpr Dist k1ia_p[] = {A3A2};
inline constexpr Dist k1ia_c[] = {A3A0};
inline constexpr Dist k1sia_p[] = {A3A2, A3F03};
inline constexpr Dist k1sia_c[] = {A3F12};
inline constexpr Dist k1ib_p[] = {A2b2};
inline constexpr Dist k1ib_c[] = {A2A3, A2A0};
inline constexpr Dist k1sib_p[] = {A2b2, A2F12};
inline constexpr Dist k1sib_c[] = {A2A3, A2F03};
inline constexpr Dist k1sic_p[] = {F03b0};
inline constexpr Dist k1sic_c[] = {F03A3, F03A2};
inline constexpr Dist k1sid_p[] = {F12b2};
inline constexpr Dist k1sid_c[] = {F12A3};
inline constexpr Dist k1iia_p[] = {A3A2, A3H};
inline constexpr Dist k1iia_c[] = {A3C};
inline constexpr Dist k1iib_p[] = {A2b2, A2L};
inline constexpr Dist k1iib_c[] = {A2C, A2A3, A2H};
inline constexpr Dist k2ib_p[] = {A2b2, A2Q};
inline constexpr Dist k2ib_c[] = {A2A0, A2J};
inline constexpr Dist k2iib_p[] = {A2b2, A2Q, A2L};
inline constexpr Dist k2iib_c[] = {A2C, A2H, A2J};
inline constexpr Dist k2siib_p[] = {A2b2, A2Q, A2F12};
inline constexpr Dist k2siib_c[] = {A2J, A2F03};
inline constexpr Dist k2siic_p[] = {F03b0, F03J};
inline constexpr Dist k2siic_c[] = {F03A2, F03Q};
inline constexpr Dist k2siid_p[] = {F12b1, F12a3};
inline constexpr Dist k2siid_c[] = {F12J, F12Q};
inline constexpr Dist k2siie_p[] = {QA2, QE, QC_half};
inline constexpr Dist k2siie_c[] = {QF03, QF12};

constexpr Regime R(Rel a3, Rel a0) { return Regime{a3, a0}; }
inline constexpr Rel G = Rel::Greater, GE = Rel::GreaterEq, LT = Rel::Less;
}  // namespace detail

/// All implemented cases, in canonical (printed) order.
inline constexpr std::array<CentreCase, 14> kCases = {{
    {"1.i.a", Centre::A3, false, false, false, detail::R(detail::G, detail::GE), detail::R(detail::GE, detail::G), detail::k1ia_p, detail::k1ia_c},
    {"1.s.i.a", Centre::A3, true, false, false, detail::R(detail::G, detail::GE), detail::R(detail::GE, detail::G), detail::k1sia_p, detail::k1sia_c},
    {"1.i.b", Centre::A2, false, false, false, detail::R(detail::GE, detail::GE), detail::R(detail::GE, detail::G), detail::k1ib_p, detail::k1ib_c},
    {"1.s.i.b", Centre::A2, true, false, false, detail::R(detail::GE, detail::GE), detail::R(detail::GE, detail::GE), detail::k1sib_p, detail::k1sib_c},
    // covering side deliberately uses the packing header (>=, >=)
    {"1.s.i.c", Centre::F03, true, false, false, detail::R(detail::GE, detail::GE), detail::R(detail::GE, detail::GE), detail::k1sic_p, detail::k1sic_c},
    {"1.s.i.d", Centre::F12, true, false, false, detail::R(detail::GE, detail::GE), detail::R(detail::GE, detail::GE), detail::k1sid_p, detail::k1sid_c},
    {"1.ii.a", Centre::A3, false, false, true, detail::R(detail::G, detail::LT), detail::R(detail::G, detail::LT), detail::k1iia_p, detail::k1iia_c},
    {"1.ii.b", Centre::A2, false, false, true, detail::R(detail::GE, detail::LT), detail::R(detail::G, detail::LT), detail::k1iib_p, detail::k1iib_c},
    {"2.i.b", Centre::A2, false, true, false, detail::R(detail::LT, detail::GE), detail::R(detail::LT, detail::G), detail::k2ib_p, detail::k2ib_c},
    {"2.ii.b", Centre::A2, false, true, true, detail::R(detail::LT, detail::LT), detail::R(detail::LT, detail::LT), detail::k2iib_p, detail::k2iib_c},
    {"2.s.ii.b", Centre::A2, true, true, true, detail::R(detail::LT, detail::LT), detail::R(detail::LT, detail::LT), detail::k2siib_p, detail::k2siib_c},
    {"2.s.ii.c", Centre::F03, true, true, true, detail::R(detail::LT, detail::LT), detail::R(detail::LT, detail::LT), detail::k2siic_p, detail::k2siic_c},
    {"2.s.ii.d", Centre::F12, true, true, true, detail::R(detail::LT, detail::LT), detail::R(detail::LT, detail::LT), detail::k2siid_p, detail::k2siid_c},
    {"2.s.ii.e", Centre::Q, true, true, true, detail::R(detail::LT, detail::LT), detail::R(detail::LT, detail::LT), detail::k2siie_p, detail::k2siie_c},
}};

inline const CentreCase& find_case(std::string_view id) {
  for (const auto& c : kCases)
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownCase, "no such case '" + std::string(id) + "'");
}

inline Site centre_site(Centre c) {
  switch (c) {
    case Centre::A3: return Site::A3;
    case Centre::A2: return Site::A2;
    case Centre::F03: return Site::F03;
    case Centre::F12: return Site::F12;
    case Centre::Q: return Site::Q;
    case Centre::J: return Site::J;
    case Centre::E: return Site::E;
    case Centre::K: return Site::K;
  }
  return Site::A3;
}

/// Raises NotSymmetric / CaseInapplicable when the case does not apply to
/// this orthoscheme in this mode.
inline void check_applicable(const Frame& f, const CentreCase& c, Mode m) {
  if (c.requires_symmetric && !f.params.symmetric())
    throw Error(ErrorCode::NotSymmetric, std::string(c.id) + " needs u = w, got " + f.params.str());
  // an ideal centre has no covering whatever the regime says
  if (m == Mode::Covering) {
    const auto centre = site(f, centre_site(c.centre));
    if (centre && classify(*centre) == PointClass::Boundary)
      throw Error(ErrorCode::CoveringUndefined, std::string(c.id) + ": centre " + to_string(c.centre) + " is ideal");
  }
  if (!c.regime(m).admits(f.params))
    throw Error(ErrorCode::CaseInapplicable,
                std::string(c.id) + " " + to_string(m) + " does not admit " + f.params.str() + " (angle-sum regime)");
}

struct Radius {
  double value = 0.0;
  std::string_view witness;
};

inline Radius radius(const Frame& f, const CentreCase& c, Mode m) {
  check_applicable(f, c, m);
  const auto centre = site(f, centre_site(c.centre));
  if (!centre || classify(*centre) != PointClass::Proper) {
    if (m == Mode::Covering)
      throw Error(ErrorCode::CoveringUndefined, std::string(c.id) + ": centre " + to_string(c.centre) + " is not proper");
    throw Error(ErrorCode::CaseInapplicable, std::string(c.id) + ": centre " + to_string(c.centre) + " is not proper");
  }

  constexpr double inf = std::numeric_limits<double>::infinity();
  Radius best{m == Mode::Packing ? inf : -inf, {}};
  for (Dist d : c.candidates(m)) {
    const DistSpec& s = spec_of(d);
    if (!site(f, s.to)) throw Error(ErrorCode::CaseInapplicable, std::string(c.id) + ": " + std::string(s.name) + " undefined");
    double value = inf;
    if (!reaches_boundary(d, f)) {
      const double ch = closed_form_cosh(d, f);
      if (!std::isfinite(ch))
        throw Error(ErrorCode::CaseInapplicable, std::string(c.id) + ": closed form for " + std::string(s.name) + " is not finite");
      value = std::acosh(std::max(ch, 1.0));
    }
    // strict comparisons keep the first printed witness on ties
    const bool better = m == Mode::Packing ? value < best.value : value > best.value;
    if (better || best.witness.empty()) best = {value, s.name};
  }
  if (!std::isfinite(best.value)) {
    if (m == Mode::Covering)
      throw Error(ErrorCode::CoveringUndefined, std::string(c.id) + ": farthest point " + std::string(best.witness) + " is ideal");
    throw Error(ErrorCode::CaseInapplicable, std::string(c.id) + ": every packing candidate is infinite");
  }
  return best;
}

inline Radius radius(const OrthoParams& p, std::string_view case_id, Mode m) {
  return radius(Frame::build(p), find_case(case_id), m);
}

/// Order of the stabilizer of the ball centre; `halved` marks the half-turn
/// extension of the symmetric (u = w) cases.
struct StabOrder {
  long long num = 1;
  long long den = 1;
  bool halved = false;

  double order() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// The factor actually dividing into the density.
  double effective() const { return halved ? 0.5 * order() : order(); }
  bool is_integer() const { return num % den == 0; }
};

inline StabOrder stabilizer_for(const OrthoParams& p, Centre c, bool halved) {
  const auto need = [&](Order o, const char* what) {
    if (o.is_infinite()) throw Error(ErrorCode::InfiniteStabilizer, std::string("stabilizer is infinite for ") + what + " = inf");
    return static_cast<long long>(o.value());
  };
  StabOrder s;
  s.halved = halved;
  switch (c) {
    case Centre::A3: {
      const long long u = need(p.u, "u"), v = need(p.v, "v");
      const long long den = 4 - (u - 2) * (v - 2);
      if (den <= 0) throw Error(ErrorCode::InfiniteStabilizer, "A3 is not proper, its stabilizer is infinite");
      s.num = 8 * u * v;
      s.den = den;
      break;
    }
    case Centre::A2:
    case Centre::Q: s.num = 4 * need(p.u, "u"); break;
    case Centre::F03:
    case Centre::J: s.num = 4 * need(p.v, "v"); break;
    case Centre::F12:
    case Centre::E: s.num = 8; break;
    case Centre::K: s.num = 2 * need(p.u, "u"); break;
  }
  const long long g = std::gcd(s.num, s.den);
  s.num /= g;
  s.den /= g;
  return s;
}

inline StabOrder stabilizer(const OrthoParams& p, const CentreCase& c) {
  return stabilizer_for(p, c.centre, c.requires_symmetric);
}

inline StabOrder stabilizer(const OrthoParams& p, std::string_view case_id) { return stabilizer(p, find_case(case_id)); }

struct CaseResult {
  OrthoParams params;
  std::string case_id;
  Mode mode = Mode::Packing;
  double radius = 0.0;
  double vol_w = 0.0;
  double vol_ball = 0.0;
  StabOrder stab;
  double density = 0.0;
  std::string witness;
};

inline CaseResult evaluate(const Frame& f, const CentreCase& c, Mode m, double vol_w) {
  const Radius r = radius(f, c, m);
  CaseResult out;
  out.params = f.params;
  out.case_id = std::string(c.id);
  out.mode = m;
  out.radius = r.value;
  out.witness = std::string(r.witness);
  out.vol_w = vol_w;
  out.vol_ball = ball_volume(r.value);
  out.stab = stabilizer(f.params, c);
  out.density = out.vol_ball / (out.stab.effective() * vol_w);
  return out;
}

inline CaseResult evaluate(const Frame& f, const CentreCase& c, Mode m) {
  return evaluate(f, c, m, orthoscheme_volume(f.params));
}

inline CaseResult evaluate(const OrthoParams& p, std::string_view case_id, Mode m) {
  return evaluate(Frame::build(p), find_case(case_id), m);
}

struct VerifyEntry {
  std::string_view name;
  double closed_form = 0.0;
  double oracle = 0.0;
  double deviation = 0.0;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  double max_deviation = 0.0;
};

/// Recomputes every finite candidate distance of the case (one mode, or
/// both) on the constructed points and compares with the closed forms.
inline VerifyReport verify_radius(const Frame& f, const CentreCase& c, std::optional<Mode> only = std::nullopt) {
  VerifyReport rep;
  const auto centre = site(f, centre_site(c.centre));
  if (!centre || classify(*centre) != PointClass::Proper) return rep;
  for (Mode m : {Mode::Packing, Mode::Covering}) {
    if (only && *only != m) continue;
    for (Dist d : c.candidates(m)) {
      const DistSpec& s = spec_of(d);
      if (!site(f, s.to) || reaches_boundary(d, f)) continue;
      double cf = std::acosh(std::max(closed_form_cosh(d, f), 1.0));
      const double oracle = oracle_distance(d, f);
      const double dev = std::isfinite(cf) ? std::abs(cf - oracle) : std::numeric_limits<double>::infinity();
      rep.entries.push_back({s.name, cf, oracle, dev});
      rep.max_deviation = std::max(rep.max_deviation, dev);
    }
  }
  return rep;
}

inline VerifyReport verify_radius(const OrthoParams& p, std::string_view case_id,
                                  std::optional<Mode> only = std::nullopt) {
  return verify_radius(Frame::build(p), find_case(case_id), only);
}

}  // namespace hypack
