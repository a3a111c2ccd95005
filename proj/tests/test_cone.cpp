#include <gtest/gtest.h>

#include "setopt/cone.hpp"

using namespace setopt;

TEST(Cone, OrthantBase) {
  const auto c = OrderingCone::orthant(2, {frac(1, 2), frac(1, 2)});
  std::vector<Vec> expected{{-2, 0}, {0, -2}};
  auto got = c->base_vertices();
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(c->in_dual({-1, -1}));
  EXPECT_FALSE(c->in_dual({1, -1}));
  EXPECT_TRUE(c->contains_interior({1, 1}));
  EXPECT_FALSE(c->contains_interior({1, 0}));
  EXPECT_EQ(c->normalize_to_base({-1, -1}), (Vec{-1, -1}));
}

TEST(Cone, GeneratedCone) {
  // cone{(1,0),(1,1)} has dual rays (0,-1) and (-1,1).
  const auto c = OrderingCone::from_generators({{1, 0}, {1, 1}}, {2, 1});
  for (const auto& v : c->base_vertices()) {
    EXPECT_TRUE(c->in_dual(v));
    EXPECT_EQ(dot(v, c->interior_point()), -1);
  }
  EXPECT_EQ(c->dual_rays().size(), 2u);
  EXPECT_TRUE(c->contains({3, 1}));
  EXPECT_FALSE(c->contains({0, 1}));
}

TEST(Cone, ThreeDimensionalPyramid) {
  const auto c = OrderingCone::from_generators({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {0, 0, 1});
  EXPECT_EQ(c->dual_rays().size(), 4u);
  for (const auto& g : c->generators())
    for (const auto& v : c->dual_rays()) EXPECT_LE(dot(g, v), 0);
}

TEST(Cone, RejectsDegenerateInput) {
  EXPECT_THROW(OrderingCone::from_generators({{1, 0}}, {1, 0}), StructuralError);
  EXPECT_THROW(OrderingCone::from_generators({{1, 0}, {0, 1}}, {1, 0}), StructuralError);
  EXPECT_THROW(OrderingCone::from_generators({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {1, 1}), StructuralError);
}
