#pragma once

#include <vector>

#include "setopt/set_map.hpp"

namespace setopt {

/// Exact right derivative φ'_{f,z*}(x,u) of the scalarization.
/// -inf when x is off the domain. When φ(x) = -inf the value is -inf along
/// directions that stay in the domain and +inf otherwise. A direction that
/// leaves the domain immediately gives +inf.
ExtReal scalar_dini(const Scalarization& phi, const Vec& x, const Vec& u);
ExtReal scalar_dini(const HFamilyMap& f, const Vec& zstar, const Vec& x, const Vec& u);
/// Same with f(x) supplied by the caller.
ExtReal scalar_dini_at(const HFamilyMap& f, const UpperSet& fx, const Vec& zstar, const Vec& x, const Vec& u);

/// Geometric grid t_k = t0·ρ^k, k = 0..k_max.
struct SampleGrid {
  Rational t0 = 1;
  Rational rho = frac(1, 2);
  int k_max = 40;
  /// Number of trailing quotients compared by the set bracket.
  int window = 3;
};

struct SampledScalar {
  ExtReal value;
  bool converged = false;
  int steps = 0;
};

/// Difference quotients (φ(x+t_k u) -. φ(x))/t_k until two consecutive ones
/// agree exactly. Non-certified.
SampledScalar scalar_dini_sampled(const Scalarization& phi, const Vec& x, const Vec& u, const SampleGrid& grid = {});

struct SetDerivative {
  UpperSet value;
  /// x is off the domain; value is Z by the residuation convention.
  bool outside_domain = false;
};

/// Exact f'(x,u): rows tight at x keep their normal with the right slope of
/// the offset as new offset; the other rows drop out.
SetDerivative set_dini(const HFamilyMap& f, const Vec& x, const Vec& u);
SetDerivative set_dini_at(const HFamilyMap& f, const UpperSet& fx, const Vec& x, const Vec& u);

/// (1/t)(f(x+tu) -. f(x))
UpperSet difference_quotient(const HFamilyMap& f, const UpperSet& fx, const Vec& x, const Vec& u, const Rational& t);

struct SetBracket {
  UpperSet upper;  // lattice sup over the final window
  UpperSet lower;  // lattice inf over the final window
  bool gap = true;  // the two brackets differ
  int steps = 0;
};

/// Sampled upper and lower Dini derivatives; stops early once `window`
/// consecutive quotients coincide.
SetBracket set_dini_upper_lower(const HFamilyMap& f, const Vec& x, const Vec& u, const SampleGrid& grid = {});

/// Functionals used by the regularity checks: base vertices of B* and the
/// row normals of f rescaled into B*, deduplicated.
std::vector<Vec> regularity_functionals(const HFamilyMap& f);

struct SrEntry {
  Vec zstar;
  ExtReal scalar;     // φ'_{f,z*}(x,u)
  ExtReal set_value;  // -σ(z*|f'(x,u))
  bool equal = false;
  bool inequality_holds = false;  // scalar <= set_value
};

struct SrVerdict {
  bool pass = true;
  bool inequality_holds = true;
  std::vector<SrEntry> entries;
};

SrVerdict check_SR(const HFamilyMap& f, const Vec& x, const Vec& u);

struct WrVerdict {
  bool pass = false;
  UpperSet derivative;
  UpperSet reconstruction;
};

/// Compares f'(x,u) with ⋂_{z*} { z | φ'_{f,z*}(x,u) <= -z*·z }.
WrVerdict check_WR(const HFamilyMap& f, const Vec& x, const Vec& u);

}  // namespace setopt
