#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"

using namespace hypack;
using hypack::test::kInf;
using hypack::test::P;

TEST(Order, ParseAndCompare) {
  EXPECT_TRUE(parse_order("inf").is_infinite());
  EXPECT_EQ(parse_order("7").value(), 7);
  EXPECT_THROW(parse_order("2"), Error);
  EXPECT_THROW(parse_order("5x"), Error);
  EXPECT_LT(Order::finite(9), Order::infinity());
  EXPECT_EQ(Order::infinity().sin_pi(), 0.0);
  EXPECT_EQ(Order::infinity().cos_pi(), 1.0);
}

TEST(AngleSum, Exact) {
  EXPECT_EQ(angle_sum_sign(Order::finite(6), Order::finite(3)), 0);
  EXPECT_EQ(angle_sum_sign(Order::finite(4), Order::finite(4)), 0);
  EXPECT_EQ(angle_sum_sign(Order::finite(5), Order::finite(3)), 1);
  EXPECT_EQ(angle_sum_sign(Order::finite(7), Order::finite(3)), -1);
  EXPECT_EQ(angle_sum_sign(Order::finite(3), Order::infinity()), -1);
}

TEST(Gram, Entries535) {
  const GramPair g = gram(P(5, 3, 5));
  const double c5 = std::cos(std::numbers::pi / 5);
  EXPECT_NEAR(g.b(0, 1), -c5, 1e-15);
  EXPECT_NEAR(g.b(1, 2), -0.5, 1e-15);
  EXPECT_NEAR(g.b(2, 3), -c5, 1e-15);
  EXPECT_EQ(g.b(0, 2), 0.0);
  EXPECT_EQ(g.b(0, 3), 0.0);
  EXPECT_EQ(g.b(1, 3), 0.0);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(g.b(i, i), 1.0);
  // B = sin^4(pi/5) - 1/4, frozen with mpmath
  EXPECT_NEAR(g.B, -0.13063562148434214, 1e-14);
  EXPECT_NEAR(g.a(3, 3), -0.73097599052622724, 1e-13);
  EXPECT_NEAR(g.a(0, 0), -0.73097599052622724, 1e-13);
}

TEST(Gram, FrozenValues) {
  EXPECT_NEAR(gram(P(3, 3, 6)).B, -0.0625, 1e-15);
  EXPECT_NEAR(gram(P(3, 3, 6)).a(3, 3), -8.0, 1e-12);
  const GramPair g435 = gram(P(4, 3, 5));
  EXPECT_NEAR(g435.B, -0.077254248593736856, 1e-14);
  EXPECT_NEAR(g435.a(3, 3), -3.2360679774997897, 1e-12);
  EXPECT_NEAR(g435.a(0, 0), -1.2360679774997897, 1e-12);
  const GramPair g733 = gram(P(7, 3, 3));
  EXPECT_NEAR(g733.B, -0.10880867569702507, 1e-14);
  EXPECT_NEAR(g733.a(3, 3), 0.56746303117679545, 1e-12);
  EXPECT_NEAR(g733.a(0, 0), -4.5952218129392273, 1e-12);
}

TEST(Gram, Hyperbolicity) {
  EXPECT_NO_THROW(gram(P(3, 3, 6)));
  EXPECT_NO_THROW(gram(P(3, 6, 3)));
  EXPECT_NO_THROW(gram(P(6, 3, 3)));
  for (auto p : {P(4, 3, 4), P(3, 3, 3), P(3, 4, 3), P(4, 3, 3), P(5, 3, 3), P(3, 3, 5)}) {
    try {
      gram(p);
      FAIL() << p.str();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotHyperbolic) << p.str();
    }
  }
}

TEST(Gram, ClosedFormMatchesInverseOverSweep) {
  for (const auto& p : test::sweep_params()) {
    const GramPair g = gram(p);
    EXPECT_LE((g.b * g.a - Mat4::Identity()).cwiseAbs().maxCoeff(), 1e-12) << p.str();
    EXPECT_LE((invert4(g.b) - g.a).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, g.a.cwiseAbs().maxCoeff()))
        << p.str();
    EXPECT_LT(g.B, 0.0);
  }
}

TEST(Gram, SwapSymmetry) {
  for (const auto& p : test::sweep_params()) {
    const GramPair g = gram(p), h = gram(p.mirrored());
    EXPECT_NEAR(g.B, h.B, 1e-12);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) EXPECT_NEAR(g.a(i, j), h.a(3 - i, 3 - j), 1e-12 * std::max(1.0, std::abs(g.a(i, j))));
    if (p.symmetric()) {
      EXPECT_NEAR(g.a(0, 0), g.a(3, 3), 1e-12 * std::max(1.0, std::abs(g.a(0, 0))));
      EXPECT_NEAR(g.a(1, 1), g.a(2, 2), 1e-12 * std::max(1.0, std::abs(g.a(1, 1))));
    }
  }
}

TEST(Gram, SignDichotomy) {
  for (const auto& p : test::sweep_params()) {
    const GramPair g = gram(p);
    const int s = angle_sum_sign(p.u, p.v);
    const double scale = std::max(1.0, g.a.cwiseAbs().maxCoeff());
    if (s > 0) EXPECT_LT(g.a(3, 3), 0.0) << p.str();
    if (s < 0) EXPECT_GT(g.a(3, 3), 0.0) << p.str();
    if (s == 0) EXPECT_LE(std::abs(g.a(3, 3)), 1e-10 * scale) << p.str();
  }
  EXPECT_NEAR(gram(P(6, 3, 4)).a(3, 3), 0.0, 1e-12);
}

TEST(Vertices, ReproduceFormValues) {
  for (const auto& p : test::sweep_params()) {
    const GramPair g = gram(p);
    const Quad a = vertices(g);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        EXPECT_NEAR(bilinear(a[i], a[j]), g.a(i, j), 1e-10 * std::max(1.0, std::abs(g.a(i, j)))) << p.str();
  }
}

TEST(Vertices, Classes) {
  const Frame f535 = Frame::build(P(5, 3, 5));
  EXPECT_NEAR(bilinear(f535.a[3], f535.a[3]), -0.73097599052622724, 1e-12);
  const Frame f733 = Frame::build(P(7, 3, 3));
  EXPECT_EQ(classify(f733.a[3]), PointClass::Outer);
  const Frame f634 = Frame::build(P(6, 3, 4));
  EXPECT_EQ(classify(f634.a[3]), PointClass::Boundary);
}

TEST(Poles, Duality) {
  for (const auto& p : test::sweep_params()) {
    const Frame f = Frame::build(p);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) EXPECT_NEAR(bilinear(f.b[i], f.a[j]), i == j ? 1.0 : 0.0, 1e-10) << p.str();
      EXPECT_NEAR(bilinear(f.b[i], f.b[i]), 1.0, 1e-10);
    }
    const LorentzVec b3 = -p.w.cos_pi() * f.a[2] + f.a[3];
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(f.b[3][k], b3[k], 1e-12 * std::max(1.0, std::abs(b3[k])));
    const LorentzVec b0 = f.a[0] - p.u.cos_pi() * f.a[1];
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(f.b[0][k], b0[k], 1e-12 * std::max(1.0, std::abs(b0[k])));
  }
}

TEST(Configure, Examples) {
  const auto c535 = configure(P(5, 3, 5));
  EXPECT_EQ(c535.a3_class, PointClass::Proper);
  EXPECT_EQ(c535.a0_class, PointClass::Proper);
  EXPECT_TRUE(c535.symmetric);
  EXPECT_EQ(c535.label, Label::OneSI);

  const auto c733 = configure(P(7, 3, 3));
  EXPECT_EQ(c733.a3_class, PointClass::Outer);
  EXPECT_EQ(c733.a0_class, PointClass::Proper);
  EXPECT_EQ(c733.label, Label::TwoI);

  const auto c33i = configure(P(3, 3, kInf));
  EXPECT_EQ(c33i.a0_class, PointClass::Outer);
  EXPECT_EQ(c33i.label, Label::OneII);

  EXPECT_EQ(configure(P(7, 3, 7)).label, Label::TwoSII);
  EXPECT_EQ(configure(P(7, 3, 8)).label, Label::TwoII);
  EXPECT_EQ(configure(P(4, 3, 5)).label, Label::OneI);
  EXPECT_EQ(configure(P(kInf, 3, kInf)).symmetric, true);
}

TEST(Configure, LabelInvariants) {
  for (const auto& p : test::sweep_params()) {
    const auto c = configure(p);
    const std::string l = to_string(c.label);
    EXPECT_EQ(l[0] == '2', c.a3_class == PointClass::Outer) << p.str();
    EXPECT_EQ(l.find(".s.") != std::string::npos, c.symmetric) << p.str();
    EXPECT_EQ(l.ends_with("ii"), c.a0_class == PointClass::Outer) << p.str();
  }
}
