#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "support.hpp"

using namespace hypack;
using hypack::test::kInf;
using hypack::test::P;

namespace {
ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::BadInput;
}
}  // namespace

TEST(CaseTable, Flags) {
  EXPECT_EQ(kCases.size(), 14u);
  for (const auto& c : kCases) {
    if (c.centre == Centre::F03 || c.centre == Centre::F12) EXPECT_TRUE(c.requires_symmetric) << c.id;
    if (c.centre == Centre::Q || c.centre == Centre::J || c.centre == Centre::E) EXPECT_TRUE(c.requires_a3_outer);
    EXPECT_EQ(c.requires_symmetric, c.id.find(".s.") != std::string_view::npos) << c.id;
    EXPECT_EQ(c.requires_a3_outer, c.id[0] == '2') << c.id;
    EXPECT_FALSE(c.packing.empty());
    EXPECT_FALSE(c.covering.empty());
  }
  EXPECT_EQ(code_of([] { find_case("3.x"); }), ErrorCode::UnknownCase);
}

TEST(Radius, Anchors) {
  const auto r = radius(P(5, 3, 5), "1.s.i.a", Mode::Packing);
  EXPECT_NEAR(r.value, 0.95142, 1e-5);
  EXPECT_EQ(r.witness, "A3F03");
  const auto R = radius(P(5, 3, 5), "1.s.i.a", Mode::Covering);
  EXPECT_NEAR(R.value, 1.12484, 1e-5);
  EXPECT_EQ(R.witness, "A3F12");
  EXPECT_NEAR(radius(P(7, 3, 3), "2.i.b", Mode::Packing).value, 0.70133, 1e-5);
}

TEST(Radius, HalfDiagonalIdentity) {
  const Frame f = Frame::build(P(5, 3, 5));
  EXPECT_NEAR(radius(f, find_case("1.s.i.a"), Mode::Packing).value, 0.5 * dist_pp(f.a[0], f.a[3]), 1e-12);
}

TEST(Radius, Errors) {
  EXPECT_EQ(code_of([] { radius(P(4, 4, 4), "1.s.i.a", Mode::Packing); }), ErrorCode::CaseInapplicable);
  EXPECT_EQ(code_of([] { radius(P(4, 3, 5), "1.s.i.a", Mode::Packing); }), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([] { radius(P(7, 3, 3), "1.i.a", Mode::Packing); }), ErrorCode::CaseInapplicable);
  // A3 on the absolute: no covering from it
  EXPECT_EQ(code_of([] { radius(P(6, 3, 3), "1.i.a", Mode::Covering); }), ErrorCode::CoveringUndefined);
  EXPECT_EQ(code_of([] { radius(P(6, 3, 4), "1.i.a", Mode::Covering); }), ErrorCode::CoveringUndefined);
}

TEST(Radius, OrderIndependentMinMax) {
  for (const auto& p : test::sweep_params()) {
    const Frame f = Frame::build(p);
    for (const auto& c : kCases)
      for (Mode m : {Mode::Packing, Mode::Covering}) {
        Radius r;
        try {
          r = radius(f, c, m);
        } catch (const Error&) {
          continue;
        }
        std::vector<double> vals;
        for (Dist d : c.candidates(m)) {
          vals.push_back(reaches_boundary(d, f) ? INFINITY : std::acosh(std::max(closed_form_cosh(d, f), 1.0)));
        }
        std::reverse(vals.begin(), vals.end());
        const double ext =
            m == Mode::Packing ? *std::min_element(vals.begin(), vals.end()) : *std::max_element(vals.begin(), vals.end());
        EXPECT_DOUBLE_EQ(r.value, ext) << p.str() << " " << c.id;
      }
  }
}

TEST(Stabilizer, Orders) {
  const auto s535 = stabilizer(P(5, 3, 5), "1.s.i.a");
  EXPECT_EQ(s535.num, 120);
  EXPECT_EQ(s535.den, 1);
  EXPECT_TRUE(s535.halved);
  EXPECT_DOUBLE_EQ(s535.effective(), 60.0);
  const auto s435 = stabilizer(P(4, 3, 5), "1.i.a");
  EXPECT_EQ(s435.num, 48);
  EXPECT_FALSE(s435.halved);
  EXPECT_EQ(stabilizer(P(5, 3, 5), "1.s.i.d").num, 8);
  EXPECT_EQ(stabilizer_for(P(7, 3, 3), Centre::E, false).num, 8);
  EXPECT_EQ(stabilizer(P(7, 3, 3), "2.i.b").num, 28);
  EXPECT_EQ(stabilizer(P(3, 7, 3), "2.s.ii.c").num, 28);
  EXPECT_EQ(stabilizer(P(6, 4, 6), "2.s.ii.e").num, 24);
  EXPECT_EQ(stabilizer_for(P(7, 3, 3), Centre::K, false).num, 14);
  EXPECT_EQ(stabilizer_for(P(7, 3, 3), Centre::J, false).num, 12);
  EXPECT_EQ(code_of([] { stabilizer(P(7, 3, 3), "1.i.a"); }), ErrorCode::InfiniteStabilizer);
  EXPECT_EQ(code_of([] { stabilizer(P(6, 3, 3), "1.i.a"); }), ErrorCode::InfiniteStabilizer);
  EXPECT_EQ(code_of([] { stabilizer(P(kInf, 3, 3), "1.i.b"); }), ErrorCode::InfiniteStabilizer);
}

TEST(Evaluate, Densities) {
  EXPECT_NEAR(evaluate(P(5, 3, 5), "1.s.i.a", Mode::Packing).density, 0.77147, 1e-5);
  EXPECT_NEAR(evaluate(P(5, 3, 5), "1.s.i.a", Mode::Covering).density, 1.36893, 1e-5);
  EXPECT_NEAR(evaluate(P(3, 5, 3), "1.i.a", Mode::Packing).density, 0.68003, 1e-5);
  const auto r = evaluate(P(5, 3, 5), "1.s.i.a", Mode::Packing);
  EXPECT_NEAR(r.density, r.vol_ball / (0.5 * 120 * r.vol_w), 1e-15);
  EXPECT_EQ(r.witness, "A3F03");
}

TEST(Evaluate, TableRowInvariants) {
  for (const auto& row : reference_rows()) {
    const auto res = evaluate(row.params, row.table_id, row.mode);
    if (row.mode == Mode::Packing) {
      EXPECT_GT(res.density, 0.0);
      EXPECT_LT(res.density, 1.0) << row.table_id << row.params.str();
      try {
        const auto cov = evaluate(row.params, row.table_id, Mode::Covering);
        EXPECT_LE(res.radius, cov.radius) << row.table_id << row.params.str();
      } catch (const Error&) {
      }
    } else {
      EXPECT_GT(res.density, 1.0) << row.table_id << row.params.str();
    }
  }
}

TEST(Evaluate, MirroredVolumeAndCovering) {
  const auto a = evaluate(P(4, 3, 5), "1.i.a", Mode::Covering);
  const auto b = evaluate(P(5, 3, 4), "1.i.a", Mode::Covering);
  EXPECT_NEAR(a.vol_w, b.vol_w, 1e-12);
  EXPECT_NEAR(a.radius, b.radius, 1e-12);  // A3A0 is its own mirror image
}

TEST(VerifyRadius, Examples) {
  EXPECT_LT(verify_radius(P(5, 3, 5), "1.i.a").max_deviation, 1e-10);
  const auto h = verify_radius(P(3, 3, kInf), "1.ii.a", Mode::Packing);
  ASSERT_FALSE(h.entries.empty());
  EXPECT_TRUE(std::any_of(h.entries.begin(), h.entries.end(), [](const auto& e) { return e.name == "A3H"; }));
  EXPECT_LT(h.max_deviation, 1e-10);
  const auto q = verify_radius(P(5, 4, 5), "2.s.ii.c", Mode::Covering);
  EXPECT_TRUE(std::any_of(q.entries.begin(), q.entries.end(), [](const auto& e) { return e.name == "F03Q"; }));
  EXPECT_LT(q.max_deviation, 1e-10);
}

TEST(VerifyRadius, EveryClosedFormOverSweep) {
  std::size_t checked = 0;
  for (const auto& p : test::sweep_params()) {
    const Frame f = Frame::build(p);
    for (const auto& c : kCases) {
      if (c.requires_symmetric && !p.symmetric()) continue;
      for (Mode m : {Mode::Packing, Mode::Covering}) {
        if (!c.regime(m).admits(p)) continue;
        const auto rep = verify_radius(f, c, m);
        checked += rep.entries.size();
        for (const auto& e : rep.entries)
          EXPECT_LT(e.deviation, 1e-10) << p.str() << " " << c.id << " " << e.name << " cf=" << e.closed_form
                                        << " oracle=" << e.oracle;
      }
    }
  }
  EXPECT_GT(checked, 500u);
}
