#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bipsym/error.hpp"
#include "bipsym/realize.hpp"
#include "bipsym/verifier.hpp"
#include "support.hpp"

namespace bipsym {
namespace {

struct Expect {
  BipartiteShape shape;
  const char* cycles;
  Orientation orientation;
  const char* label;
  Matrix4 matrix;
  int subdivisions;
};

Matrix4 block(const RationalAngle& a, const RationalAngle& b) {
  Matrix4 m = Matrix4::Zero();
  m.topLeftCorner<2, 2>() = rotation2(a);
  m.bottomRightCorner<2, 2>() = rotation2(b);
  return m;
}

Matrix4 improper(const RationalAngle& a) {
  Matrix4 m = block(a, RationalAngle(0, 1));
  m(3, 3) = -1.0;
  return m;
}

const Orientation OP = Orientation::Preserving;
const Orientation OR = Orientation::Reversing;

std::vector<Expect> dispatch_table() {
  const RationalAngle zero(0, 1);
  Matrix4 refl = Matrix4::Identity();
  refl(3, 3) = -1.0;
  return {
      {{3, 3}, "(v1 v2 v3)(w1 w2 w3)", OP, "OP1", block(RationalAngle(1, 3), zero), 0},
      {{3, 4}, "(v1 v2)(w1 w2)(w3 w4)", OP, "OP2", block(RationalAngle(1, 2), zero), 0},
      {{4, 4}, "(v3 v4)(w3 w4)", OP, "OP3", block(RationalAngle(1, 2), zero), 0},
      {{3, 3}, "(v1 w1 v2 w2 v3 w3)", OP, "OP1", block(RationalAngle(2, 6), RationalAngle(1, 6)), 3},
      {{3, 3}, "(v1 w1)(v2 w2)(v3 w3)", OP, "OP1", block(zero, RationalAngle(1, 2)), 3},
      {{4, 4}, "(v1 w1 v2 w2)(v3 w3 v4 w4)", OP, "OP1", block(RationalAngle(1, 4), RationalAngle(1, 4)), 0},
      {{4, 4}, "(v1 v2)(v3 v4)(w1 w2 w3 w4)", OP, "OP4", block(RationalAngle(1, 2), RationalAngle(1, 4)), 0},
      {{5, 6}, "(v1 v2)(v3 v4 v5)(w1 w2 w3 w4 w5 w6)", OP, "OP5", block(RationalAngle(1, 2), RationalAngle(1, 3)), 0},
      {{3, 4}, "(v1 v2 v3)(w1 w2)(w3 w4)", OP, "OP6", block(RationalAngle(1, 3), RationalAngle(1, 2)), 0},
      {{6, 6}, "(v1 v2)(v3 v4 v5 v6)(w1 w2)(w3 w4 w5 w6)", OP, "OP7", block(RationalAngle(1, 2), RationalAngle(1, 4)), 0},
      {{5, 8}, "(v1 v2)(v3 v4 v5)(w1 w2)(w3 w4 w5 w6 w7 w8)", OP, "OP8", block(RationalAngle(1, 2), RationalAngle(2, 6)), 0},
      {{6, 6}, "(v1 w1 v2 w2)(v3 w3 v4 w4 v5 w5 v6 w6)", OP, "OP9", block(RationalAngle(1, 4), RationalAngle(1, 8)), 0},
      {{4, 4}, "(v1 v2 v3 v4)(w1 w2 w3 w4)", OR, "OR10", improper(RationalAngle(1, 4)), 0},
      {{3, 4}, "(w3 w4)", OR, "OR11", refl, 0},
      {{4, 6}, "(v1 v2 v3 v4)(w1 w2)(w3 w4 w5 w6)", OR, "OR12a", improper(RationalAngle(1, 4)), 0},
      {{3, 4}, "(v1 v2)(w1 w2 w3 w4)", OR, "OR12b", improper(RationalAngle(1, 4)), 0},
      {{3, 3}, "(v1 v2)(w1 w2 w3)", OR, "OR12c", improper(RationalAngle(2, 6)), 0},
      {{4, 8}, "(v1 v2 v3)(w1 w2)(w3 w4 w5 w6 w7 w8)", OR, "OR12d", improper(RationalAngle(2, 6)), 0},
      {{4, 4}, "(v1 w1)(v2 w2)(v3 w3 v4 w4)", OR, "OR13", improper(RationalAngle(1, 4)), 2},
  };
}

class Dispatch : public ::testing::TestWithParam<Expect> {};

TEST_P(Dispatch, ConstructionAndCertificate) {
  const Expect& e = GetParam();
  const auto aut = parse_cycles(e.shape, e.cycles);
  const Realization r = realize(aut, e.orientation, 1);
  EXPECT_EQ(r.realized_case.label(), e.label);
  EXPECT_LE((r.isometry.matrix() - e.matrix).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(r.isometry.claimed_order(), aut.order());
  EXPECT_EQ(static_cast<int>(r.embedding.graph().subdivisions().size()), e.subdivisions);
  const auto cert = verify(aut, r.isometry, r.embedding);
  for (const auto& c : cert.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

INSTANTIATE_TEST_SUITE_P(Cases, Dispatch, ::testing::ValuesIn(dispatch_table()),
                         [](const auto& info) {
                           return std::string(info.param.label) + "_" +
                                  std::to_string(info.index);
                         });

TEST(Realize, ReflectionExample) {
  const BipartiteShape s(3, 4);
  const auto r = realize(parse_cycles(s, "(w3 w4)"), OR, 1);
  const auto& emb = r.embedding;
  for (const char* name : {"v1", "v2", "v3", "w1", "w2"}) {
    EXPECT_EQ(emb.vertex(parse_vertex(name, s))(3), 0.0) << name;
  }
  const Vector4 w3 = emb.vertex({Part::W, 3});
  const Vector4 w4 = emb.vertex({Part::W, 4});
  EXPECT_EQ(w4, r.isometry.matrix() * w3);
  EXPECT_GT(std::abs(w3(3)), 1e-6);
}

TEST(Realize, FixedVerticesAlternateAroundX) {
  const BipartiteShape s(4, 4);
  const auto r = realize(parse_cycles(s, "(v3 v4)(w3 w4)"), OP, 1);
  const auto angle = [&](VertexId v) {
    const Vector4 p = r.embedding.vertex(v);
    EXPECT_NEAR(std::hypot(p(0), p(1)), 0.0, 1e-15);
    double a = std::atan2(p(3), p(2));
    return a < -1e-12 ? a + 2 * std::numbers::pi : a;
  };
  EXPECT_NEAR(angle({Part::V, 1}), 0.0, 1e-12);
  EXPECT_NEAR(angle({Part::W, 1}), std::numbers::pi / 2, 1e-12);
  EXPECT_NEAR(angle({Part::V, 2}), std::numbers::pi, 1e-12);
  EXPECT_NEAR(angle({Part::W, 2}), 3 * std::numbers::pi / 2, 1e-12);
}

TEST(Realize, CaseThirteenMidpointsOnF) {
  const BipartiteShape s(4, 4);
  const auto r = realize(parse_cycles(s, "(v1 w1)(v2 w2)(v3 w3 v4 w4)"), OR, 1);
  const auto& g = r.embedding.graph();
  ASSERT_EQ(g.subdivisions().size(), 2u);
  for (std::size_t k = 0; k < 2; ++k) {
    const Vector4 z = r.embedding.point(s.vertex_count() + static_cast<int>(k));
    EXPECT_LT(landmark_f().distance_to(z), 1e-15);
  }
}

TEST(Realize, OverlappingCasesUseTheFirstReading) {
  // Without fixed V vertices, case 12d also reads as 12c with V and W
  // relabelled, and 12c comes first.
  const auto aut = parse_cycles({3, 8}, "(v1 v2 v3)(w1 w2)(w3 w4 w5 w6 w7 w8)");
  const auto v = classify_aut(aut);
  ASSERT_EQ(v.labels(OR), (std::vector<std::string>{"OR12c", "OR12d"}));
  const auto r = realize(aut, OR, 1);
  EXPECT_EQ(r.realized_case, (CaseId{OR, 12, 'c', true}));
  EXPECT_TRUE(verify(aut, r.isometry, r.embedding).overall());
}

TEST(Realize, DeterministicPerSeed) {
  const BipartiteShape s(3, 3);
  const auto aut = parse_cycles(s, "(v1 v2 v3)(w1 w2 w3)");
  const auto a = realize(aut, OP, 7);
  const auto b = realize(aut, OP, 7);
  const auto c = realize(aut, OP, 8);
  EXPECT_EQ(a.embedding.points(), b.embedding.points());
  EXPECT_NE(a.embedding.points(), c.embedding.points());
  EXPECT_EQ(a.seed, 7u);
}

TEST(Realize, Errors) {
  try {
    realize(parse_cycles({3, 3}, "(v1 v2 v3)(w1 w2 w3)"), OR, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotRealizable);
  }
  try {
    realize(identity_automorphism({2, 3}), OP, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfTheoremScope);
  }
}

TEST(Realize, IdentityUsesTrivialRotation) {
  const auto r = realize(identity_automorphism({3, 3}), OP, 1);
  EXPECT_EQ(r.isometry.matrix(), Matrix4::Identity());
  EXPECT_TRUE(verify(identity_automorphism({3, 3}), r.isometry, r.embedding).overall());
}

// Every realizable pair over the desk shapes, for several seeds.
class Soundness : public ::testing::TestWithParam<BipartiteShape> {};

TEST_P(Soundness, RealizeThenVerifyPasses) {
  for (const auto& a : enumerate_automorphisms(GetParam())) {
    const auto v = classify_aut(a);
    for (Orientation o : {OP, OR}) {
      if (!v.realizable(o)) continue;
      for (std::uint64_t seed : {1u, 2u, 99u}) {
        const auto r = realize(a, o, seed);
        EXPECT_EQ(r.isometry.orientation(), o);
        const auto cert = verify(a, r.isometry, r.embedding);
        if (!cert.overall()) {
          for (const auto& c : cert.checks) {
            EXPECT_TRUE(c.pass) << a.to_cycle_notation() << " " << short_name(o)
                                << " seed " << seed << " " << c.name << ": " << c.detail;
          }
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(DeskShapes, Soundness, ::testing::ValuesIn(testing::desk_shapes()),
                         [](const auto& info) { return testing::shape_name(info.param); });

TEST(Realize, LargerShapesVerify) {
  // A sample of bigger shapes where more of the glide cases occur.
  std::uint64_t checked = 0;
  for (const BipartiteShape s : {BipartiteShape(5, 5), BipartiteShape(3, 6),
                                 BipartiteShape(6, 3)}) {
    for (const auto& a : enumerate_automorphisms(s)) {
      const auto v = classify_aut(a);
      for (Orientation o : {OP, OR}) {
        if (!v.realizable(o)) continue;
        const auto r = realize(a, o, 3);
        EXPECT_TRUE(verify(a, r.isometry, r.embedding).overall())
            << a.to_cycle_notation() << " " << short_name(o);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

}  // namespace
}  // namespace bipsym
