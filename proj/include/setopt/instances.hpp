#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "setopt/certify.hpp"

namespace setopt {

struct ExpectedVerdict {
  Condition condition;
  bool holds;
  /// Short justification: "worked example" or "computed".
  std::string basis;
};

struct Instance {
  std::string name;
  MapPtr map;
  Vec x0;
  TestSet testset;
  WitnessSearch search;
  std::vector<ExpectedVerdict> expected;
  std::vector<std::string> notes;
};

/// f(x) = { z1+z2 >= 1 - x/2, z1 >= x, z2 >= x } on [0, 2/3], C = R^2_+,
/// e = (1/2, 1/2), x0 = 2/3.
Instance build_r2_minty_gap();

/// Rational stand-in for sqrt(n^2 - 1): floor(10^6 · sqrt(n^2 - 1)) / 10^6.
Rational linf_alpha(int n);
/// ψ_n(x) = max{(α_n - n)(x+1), (α_n + n)(x-1)} on [-1,1], n = 1..N, as ψ^C
/// in R^N with the orthant. The slope switch sits exactly at α_n / n.
Instance build_linf_truncated(int n_components = 5);

/// ψ(x) = x on S = { x >= 0, x1 + x2 >= 1 } in R^2, x0 = (0, 2).
Instance build_pareto_identity();
/// The 25 points x1 = i/4, x2 = 1 - x1 + j/2, i, j = 0..4.
TestSet pareto_grid();

/// m = 1: f(x) = [g(x), +inf) with g(x) = max{-x-1, x/2 - 1/4, 2x - 2} on [-2, 2].
Instance build_extreals_oracle();

/// Names accepted: r2-minty-gap, linf-truncated, linf-truncated:N,
/// pareto-identity, extreals-oracle.
Instance builtin(const std::string& name);
std::vector<std::string> builtin_names();

struct RandomSpec {
  /// Fixed dimensions when positive, otherwise drawn from 1..max.
  int n = 0;
  int m = 0;
  int max_n = 3;
  int max_m = 3;
  int max_rows = 6;
  int max_pieces = 3;
  /// Probability weight (out of 3) of drawing a ψ^C instance.
  int psi_weight = 1;
  int testset_size = 9;
};

/// Deterministic per seed. Offsets are concave by construction.
Instance generate_random(std::uint64_t seed, const RandomSpec& spec = {});

struct ParetoSets {
  std::vector<Vec> efficient;
  std::vector<Vec> weakly_efficient;
};

/// Pairwise dominance over T ∩ S under <=_C.
ParetoSets brute_force_pareto(const VectorMap& psi, const TestSet& t);

}  // namespace setopt
