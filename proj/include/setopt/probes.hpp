#pragma once

#include <functional>
#include <string>
#include <vector>

#include "setopt/set_map.hpp"

namespace setopt {

enum class ProbeVariant { BStarLsc, UpperHausdorff, LatticeLsc, CContinuity };
enum class ProbeOutcome { Pass, Fail, Inconclusive };

std::string_view probe_name(ProbeVariant v);
std::string_view outcome_name(ProbeOutcome o);

/// Radial sampling plan. Empty directions mean ± unit vectors plus ±(1,...,1);
/// empty radii mean 2^-1 .. 2^-8; empty functionals mean the base vertices.
struct ProbeSpec {
  std::vector<Vec> directions;
  std::vector<Rational> radii;
  std::vector<Vec> functionals;
};

/// Sampled diagnostic, never a certificate. For each direction the defect
/// d(r) of the defining inequality is computed exactly at every radius. The
/// probe passes when the trailing defects are nonpositive or shrink linearly
/// in r (all maps here are piecewise linear), fails when a positive defect
/// does not shrink, and is inconclusive otherwise.
struct ProbeReport {
  ProbeVariant variant = ProbeVariant::BStarLsc;
  ProbeOutcome outcome = ProbeOutcome::Pass;
  int samples = 0;
  std::string detail;
};

using SetFunction = std::function<UpperSet(const Vec&)>;

/// Variants on a set-valued map given as a function.
ProbeReport continuity_probe(const SetFunction& f, const ConePtr& cone, const Vec& x0, ProbeVariant variant,
                             const ProbeSpec& spec = {});
ProbeReport continuity_probe(const HFamilyMap& f, const Vec& x0, ProbeVariant variant, const ProbeSpec& spec = {});
/// C-continuity of ψ at x0: the least τ with ψ(x) - ψ(x0) in τ·U + C over
/// points of S near x0.
ProbeReport c_continuity_probe(const VectorMap& psi, const Vec& x0, const ProbeSpec& spec = {});

/// Least τ >= 0 with d in τ·U + C, U the l∞ unit ball.
Rational c_excess(const OrderingCone& cone, const Vec& d);

}  // namespace setopt
