#include <gtest/gtest.h>

#include "setopt/instances.hpp"
#include "setopt/probes.hpp"

using namespace setopt;

namespace {

ConePtr line_cone() { return OrderingCone::orthant(1); }

std::shared_ptr<VectorMap> identity_map() {
  auto psi = std::make_shared<VectorMap>();
  psi->cone = OrderingCone::orthant(2);
  psi->domain = XDomain::box({-1, -1}, {1, 1});
  psi->components = {ConvexComponent{{{{1, 0}, 0}}}, ConvexComponent{{{{0, 1}, 0}}}};
  return psi;
}

}  // namespace

TEST(Probes, MintyGapUpperHausdorffOnDomain) {
  const Instance inst = build_r2_minty_gap();
  for (const Rational& x : {Rational(0), frac(1, 3), frac(2, 3)}) {
    const ProbeReport r = continuity_probe(*inst.map, {x}, ProbeVariant::UpperHausdorff);
    EXPECT_EQ(r.outcome, ProbeOutcome::Pass) << x << " " << r.detail;
    EXPECT_GT(r.samples, 0);
  }
}

TEST(Probes, IdentityIsContinuousEverywhereOnS) {
  const auto psi = identity_map();
  for (const Vec& x : {Vec{0, 0}, Vec{1, 1}, Vec{-1, frac(1, 2)}, Vec{frac(1, 3), -1}})
    EXPECT_EQ(c_continuity_probe(*psi, x).outcome, ProbeOutcome::Pass);
}

TEST(Probes, JumpAtEmptyBoundaryFails) {
  const ConePtr C = line_cone();
  const SetFunction jump = [C](const Vec& x) { return x[0] > 0 ? UpperSet::cone_set(C) : UpperSet::empty(C); };
  for (ProbeVariant v : {ProbeVariant::BStarLsc, ProbeVariant::UpperHausdorff, ProbeVariant::LatticeLsc})
    EXPECT_EQ(continuity_probe(jump, C, {0}, v).outcome, ProbeOutcome::Fail) << probe_name(v);
  // Away from the jump the same map is constant.
  EXPECT_EQ(continuity_probe(jump, C, {1}, ProbeVariant::UpperHausdorff).outcome, ProbeOutcome::Pass);
}

TEST(Probes, LinearDecayPasses) {
  const ConePtr C = line_cone();
  // f(x) = |x|·(-1) + C exceeds f(0) = C by |x|.
  const SetFunction f = [C](const Vec& x) { return UpperSet::translate(C, {-abs(x[0])}); };
  for (ProbeVariant v : {ProbeVariant::BStarLsc, ProbeVariant::UpperHausdorff, ProbeVariant::LatticeLsc})
    EXPECT_EQ(continuity_probe(f, C, {0}, v).outcome, ProbeOutcome::Pass) << probe_name(v);
}

TEST(Probes, OscillatingDefectIsInconclusive) {
  const ConePtr C = line_cone();
  // Excess |x| at radii 2^-k with k even, none with k odd.
  const SetFunction f = [C](const Vec& x) {
    Rational a = abs(x[0]);
    int k = 0;
    while (a > 0 && a < 1) a *= 2, ++k;
    return UpperSet::translate(C, {k % 2 == 0 ? -abs(x[0]) : Rational(0)});
  };
  EXPECT_EQ(continuity_probe(f, C, {0}, ProbeVariant::UpperHausdorff).outcome, ProbeOutcome::Inconclusive);
}

TEST(Probes, CExcess) {
  const ConePtr C = OrderingCone::orthant(2);
  EXPECT_EQ(c_excess(*C, {1, 1}), 0);
  EXPECT_EQ(c_excess(*C, {1, -2}), 2);
  EXPECT_EQ(c_excess(*C, {-frac(1, 2), -frac(1, 3)}), frac(1, 2));
  // C = cone{(1,0),(1,1)}: (0,1) needs w = (-1/2, 1/2).
  const ConePtr K = OrderingCone::from_generators({{1, 0}, {1, 1}}, {2, 1});
  EXPECT_EQ(c_excess(*K, {0, 1}), frac(1, 2));
  EXPECT_EQ(c_excess(*K, {3, 1}), 0);
}

TEST(Probes, BuiltinsAtCandidates) {
  for (const auto& name : builtin_names()) {
    const Instance inst = builtin(name);
    for (ProbeVariant v : {ProbeVariant::BStarLsc, ProbeVariant::UpperHausdorff, ProbeVariant::LatticeLsc})
      EXPECT_EQ(continuity_probe(*inst.map, inst.x0, v).outcome, ProbeOutcome::Pass) << name << probe_name(v);
  }
}
