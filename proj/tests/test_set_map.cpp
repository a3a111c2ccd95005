#include <gtest/gtest.h>

#include "setopt/instances.hpp"

using namespace setopt;

TEST(ConcavePWL, ValueSlopeAndDedupe) {
  const ConcavePWL b({{{1, 0}, 0}, {{0, 1}, 0}, {{1, 0}, 3}});
  EXPECT_EQ(b.pieces().size(), 2u);
  EXPECT_EQ(b.value({2, 5}), 2);
  EXPECT_EQ(b.value({-1, -3}), -3);
  // Both pieces active at the origin: the right slope is the smaller one.
  EXPECT_EQ(b.right_slope({0, 0}, {1, -1}), -1);
  EXPECT_EQ(b.right_slope({0, 0}, {-1, 2}), -1);
  EXPECT_EQ(b.right_slope({1, 3}, {-1, 2}), -1);
}

TEST(ConcavePWL, AlongAndArithmetic) {
  const ConcavePWL b({{{1, -1}, 1}, {{-2, 0}, 4}});
  const Vec x0{1, 0}, x{3, 2};
  const ConcavePWL r = b.along(x0, x);
  for (int k = -4; k <= 8; ++k) {
    const Rational t = frac(k, 4);
    EXPECT_EQ(r.value({t}), b.value(add(x0, scaled(t, sub(x, x0)))));
  }
  const ConcavePWL c = ConcavePWL::affine({0, 1}, -2);
  for (const Vec& p : {Vec{0, 0}, Vec{1, 2}, Vec{-3, frac(1, 2)}}) {
    EXPECT_EQ(b.plus(c).value(p), b.value(p) + c.value(p));
    EXPECT_EQ(b.times(frac(3, 2)).value(p), frac(3, 2) * b.value(p));
    EXPECT_EQ(b.plus_constant(7).value(p), b.value(p) + 7);
  }
}

TEST(XDomain, StepLimit) {
  const XDomain d = XDomain::box({0, 0}, {1, 2});
  EXPECT_EQ(d.step_limit({0, 0}, {1, 1}), ExtReal(1));
  EXPECT_EQ(d.step_limit({0, 0}, {frac(1, 4), 1}), ExtReal(2));
  EXPECT_EQ(d.step_limit({1, 2}, {1, 0}), ExtReal(0));
  EXPECT_TRUE(d.step_limit({2, 0}, {-1, 0}).is_minus_inf());
  EXPECT_TRUE(XDomain::whole(2).step_limit({5, 5}, {1, 0}).is_plus_inf());
}

TEST(HFamilyMap, EmptyOutsideDomainNonemptyInside) {
  const Instance inst = build_r2_minty_gap();
  EXPECT_TRUE(inst.map->evaluate({1}).is_empty());
  EXPECT_TRUE(inst.map->evaluate({-frac(1, 10)}).is_empty());
  for (int k = 0; k <= 6; ++k) EXPECT_FALSE(inst.map->evaluate({frac(k, 9)}).is_empty());
}

TEST(HFamilyMap, RestrictionCommutesWithEvaluation) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = generate_random(seed);
    const HFamilyMap& f = *inst.map;
    for (const auto& x : inst.testset.points) {
      const HFamilyMap r = restrict(f, inst.x0, x);
      for (int k = -2; k <= 6; ++k) {
        const Rational t = frac(k, 4);
        const UpperSet got = r.evaluate({t});
        if (t < 0 || t > 1) {
          EXPECT_TRUE(got.is_empty());
          continue;
        }
        const UpperSet want = f.evaluate(add(inst.x0, scaled(t, sub(x, inst.x0))));
        EXPECT_TRUE(set_equal(got, want)) << "seed " << seed << " t " << t;
      }
    }
  }
}

TEST(VectorExtension, EpigraphOfIdentity) {
  auto C = OrderingCone::orthant(2);
  auto psi = std::make_shared<VectorMap>();
  psi->cone = C;
  psi->domain = XDomain::whole(2);
  psi->components = {ConvexComponent{{{{1, 0}, 0}}}, ConvexComponent{{{{0, 1}, 0}}}};
  const HFamilyMap f = epigraphical_extension("id", psi);
  for (const Vec& x : {Vec{0, 0}, Vec{1, -2}, Vec{frac(1, 3), 4}})
    EXPECT_TRUE(set_equal(f.evaluate(x), UpperSet::translate(C, x)));
  ASSERT_TRUE(f.vector_source());
}

TEST(VectorExtension, ConvexComponentAgainstPositiveWeightRejected) {
  // B* of cone{(1,0),(1,1)} has a vertex with a positive second coordinate.
  auto C = OrderingCone::from_generators({{1, 0}, {1, 1}}, {2, 1});
  auto psi = std::make_shared<VectorMap>();
  psi->cone = C;
  psi->domain = XDomain::whole(1);
  psi->components = {ConvexComponent{{{{0}, 0}}}, ConvexComponent{{{{1}, 0}, {{-1}, 0}}}};
  EXPECT_THROW(epigraphical_extension("bad", psi), ValidationError);
}

TEST(VectorExtension, SetExtensionAddsPolytope) {
  auto C = OrderingCone::orthant(2);
  auto psi = std::make_shared<VectorMap>();
  psi->cone = C;
  psi->domain = XDomain::box({-1}, {1});
  psi->components = {ConvexComponent{{{{1}, 0}, {{-1}, 0}}}, ConvexComponent{{{{0}, 1}}}};
  const std::vector<Vec> pts{{0, 1}, {1, 0}};
  const HFamilyMap f = set_extension("F", psi, pts);
  for (const Rational& x : {Rational(-1), frac(-1, 2), Rational(0), frac(2, 3)}) {
    const Vec p = psi->value({x});
    const UpperSet want = lattice_inf({UpperSet::translate(C, add(p, pts[0])), UpperSet::translate(C, add(p, pts[1]))}, C);
    EXPECT_TRUE(set_equal(f.evaluate({x}), want));
  }
  EXPECT_TRUE(f.evaluate({2}).is_empty());
}

TEST(Scalarization, MatchesSupportAndPlusInfOutside) {
  const Instance inst = build_r2_minty_gap();
  const Scalarization phi = scalarize(inst.map, {-1, -1});
  EXPECT_EQ(phi.value({0}), ExtReal(1));
  EXPECT_EQ(phi.value({frac(2, 3)}), ExtReal(frac(4, 3)));
  EXPECT_TRUE(phi.value({1}).is_plus_inf());
  EXPECT_THROW(scalarize(inst.map, {1, 0}), StructuralError);
}

TEST(Convexity, BuiltinsAndRandomMapsValidate) {
  for (const auto& name : builtin_names()) {
    const Instance inst = builtin(name);
    EXPECT_TRUE(validate_convexity(*inst.map, inst.testset.points).convex) << name;
  }
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const Instance inst = generate_random(seed);
    EXPECT_TRUE(validate_convexity(*inst.map, inst.testset.points).convex) << seed;
  }
}
