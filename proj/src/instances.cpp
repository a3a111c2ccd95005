#include "setopt/instances.hpp"

#include <random>

namespace setopt {

namespace {

ConvexComponent affine_component(Vec g, Rational h) { return ConvexComponent{{AffinePiece{std::move(g), std::move(h)}}}; }

Instance make(std::string name, HFamilyMap f, Vec x0, TestSet t) {
  Instance inst;
  inst.name = std::move(name);
  inst.map = std::make_shared<const HFamilyMap>(std::move(f));
  inst.x0 = std::move(x0);
  inst.testset = std::move(t);
  return inst;
}

}  // namespace

Instance build_r2_minty_gap() {
  const ConePtr cone = OrderingCone::orthant(2, {frac(1, 2), frac(1, 2)});
  std::vector<MapRow> rows{
      {{-1, -1}, ConcavePWL::affine({frac(1, 2)}, -1)},
      {{-1, 0}, ConcavePWL::affine({-1}, 0)},
      {{0, -1}, ConcavePWL::affine({-1}, 0)},
  };
  HFamilyMap f("r2-minty-gap", cone, XDomain::box({0}, {frac(2, 3)}), std::move(rows));
  Instance inst = make("r2-minty-gap", std::move(f), {frac(2, 3)},
                       TestSet::of({{0}, {frac(1, 5)}, {frac(1, 3)}, {frac(2, 3)}, {1}}));
  inst.expected = {
      {Condition::Min, false, "worked example: f(2/3) is a proper subset of f(0)"},
      {Condition::mvi_M, true, "worked example: z* = (-1,-1) on the test set"},
      {Condition::MVI_M, false, "worked example: f'(0,1) = (1,1) + C inside int 0+f(0)"},
      {Condition::SR, false, "worked example: -sigma = 2 against phi' = -1/2"},
  };
  inst.notes = {
      "for 2/5 <= x < 2/3 only the coordinate rows are active, so every phi'(x, x0 - x) is positive and the "
      "scalarized Minty clause fails there; the test set stays below 2/5"};
  return inst;
}

Rational linf_alpha(int n) {
  require(n >= 1, "component index must be positive");
  mpz_class radicand = mpz_class(n) * n - 1;
  radicand *= mpz_class("1000000000000");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  Rational a(root, mpz_class(1000000));
  a.canonicalize();
  return a;
}

Instance build_linf_truncated(int n_components) {
  require(n_components >= 2, "truncation order must be at least 2");
  auto psi = std::make_shared<VectorMap>();
  psi->cone = OrderingCone::orthant(static_cast<std::size_t>(n_components));
  psi->domain = XDomain::box({-1}, {1});
  for (int n = 1; n <= n_components; ++n) {
    const Rational a = linf_alpha(n);
    const Rational lo = a - n, hi = a + n;
    psi->components.push_back(ConvexComponent{{AffinePiece{{lo}, lo}, AffinePiece{{hi}, -hi}}});
  }
  const std::string name = "linf-truncated:" + std::to_string(n_components);
  HFamilyMap f = epigraphical_extension(name, psi);
  Instance inst = make(name, std::move(f), {1},
                       TestSet::of({{0}, {frac(1, 2)}, {frac(9, 10)}, {frac(99, 100)}, {frac(-1, 2)}, {-1}, {1}}));
  inst.expected = {
      {Condition::Min, false, "worked example: f(1) is a proper subset of f(x) for -1 < x < 1"},
      {Condition::mvi_M, false, "computed: every slope is positive above the largest threshold"},
  };
  for (int n = 1; n <= n_components; ++n)
    inst.notes.push_back("n = " + std::to_string(n) + ": sqrt(n^2-1) replaced by " + to_string(linf_alpha(n)) +
                         ", threshold " + to_string(linf_alpha(n) / n));
  return inst;
}

TestSet pareto_grid() {
  std::vector<Vec> pts;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      const Rational x1 = frac(i, 4);
      pts.push_back({x1, 1 - x1 + frac(j, 2)});
    }
  return TestSet::of(std::move(pts));
}

Instance build_pareto_identity() {
  auto psi = std::make_shared<VectorMap>();
  psi->cone = OrderingCone::orthant(2, {1, 1});
  psi->domain = XDomain{2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{-1, -1}, -1}}};
  psi->components = {affine_component({1, 0}, 0), affine_component({0, 1}, 0)};
  HFamilyMap f = epigraphical_extension("pareto-identity", psi);
  Instance inst = make("pareto-identity", std::move(f), {0, 2}, pareto_grid());
  for (Condition c : {Condition::WlMin, Condition::WscMin, Condition::WMin, Condition::SVI_W, Condition::svi_W,
                      Condition::MVI_W, Condition::mvi_W})
    inst.expected.push_back({c, true, "worked example: x0 lies on the boundary of S"});
  for (Condition c : {Condition::Min, Condition::SVI_M, Condition::svi_M, Condition::MVI_M, Condition::mvi_M})
    inst.expected.push_back({c, false, "worked example: (0,1) dominates x0"});
  inst.notes = {"S = { x >= 0, x1 + x2 >= 1 }, which reproduces the stated minimizer and weak minimizer sets"};
  return inst;
}

Instance build_extreals_oracle() {
  const ConePtr cone = OrderingCone::orthant(1);
  std::vector<MapRow> rows{
      {{-1}, ConcavePWL({{{1}, 1}, {{frac(-1, 2)}, frac(1, 4)}, {{-2}, 2}})},
  };
  HFamilyMap f("extreals-oracle", cone, XDomain::box({-2}, {2}), std::move(rows));
  Instance inst = make("extreals-oracle", std::move(f), {frac(-1, 2)}, TestSet::grid({-3}, {3}, 12));
  for (Condition c : kTwelveConditions) inst.expected.push_back({c, true, "computed: x0 minimizes g"});
  return inst;
}

std::vector<std::string> builtin_names() {
  return {"r2-minty-gap", "linf-truncated", "pareto-identity", "extreals-oracle"};
}

Instance builtin(const std::string& name) {
  if (name == "r2-minty-gap") return build_r2_minty_gap();
  if (name == "pareto-identity") return build_pareto_identity();
  if (name == "extreals-oracle") return build_extreals_oracle();
  if (name == "linf-truncated") return build_linf_truncated(5);
  const std::string prefix = "linf-truncated:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string digits = name.substr(prefix.size());
    require(!digits.empty() && digits.size() < 4 && digits.find_first_not_of("0123456789") == std::string::npos,
            "linf-truncated needs an integer order");
    return build_linf_truncated(std::stoi(digits));
  }
  throw StructuralError("unknown built-in instance '" + name + "'");
}

namespace {

struct Draw {
  std::mt19937_64 rng;
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  Rational rational(int lo, int hi, int max_den) { return frac(uniform(lo * max_den, hi * max_den), uniform(1, max_den)); }
  Vec vec(std::size_t n, int lo, int hi, int max_den) {
    Vec v(n);
    for (auto& x : v) x = rational(lo, hi, max_den);
    return v;
  }
};

ConePtr random_cone(Draw& d, std::size_t m) {
  if (m == 1 || d.uniform(0, 1) == 0) {
    Vec e(m);
    for (auto& x : e) x = d.uniform(1, 2);
    return OrderingCone::orthant(m, e);
  }
  std::vector<Vec> gens;
  if (m == 2) {
    gens = {{1, Rational(d.uniform(-1, 1))}, {Rational(d.uniform(-1, 1)), 1}};
    if (gens[0][1] * gens[1][0] == 1) gens[1][0] = 0;
  } else {
    const int tilt = d.uniform(0, 1);
    gens = {{1, 0, 1}, {0, 1, 1}, {-1, Rational(tilt), 1}};
    if (d.uniform(0, 1) == 1) gens.push_back({0, -1, 1});
  }
  Vec e = zeros(m);
  for (const auto& g : gens) e = add(e, g);
  return OrderingCone::from_generators(gens, e);
}

Vec random_dual_normal(Draw& d, const OrderingCone& cone) {
  Vec a = zeros(cone.dimension());
  while (is_zero(a))
    for (const auto& v : cone.dual_rays()) a = add(a, scaled(d.uniform(0, 2), v));
  return a;
}

AffinePiece random_piece(Draw& d, std::size_t n) { return {d.vec(n, -2, 2, 2), d.rational(-2, 2, 2)}; }

}  // namespace

Instance generate_random(std::uint64_t seed, const RandomSpec& spec) {
  require(spec.max_n >= 1 && spec.max_n <= 4 && spec.max_m >= 1 && spec.max_m <= 4, "random dimensions out of range");
  require(spec.max_rows >= 1 && spec.max_rows <= 8 && spec.max_pieces >= 1 && spec.max_pieces <= 4,
          "random sizes out of range");
  require(spec.n <= 4 && spec.m <= 4, "random dimensions out of range");
  Draw d{std::mt19937_64(seed)};
  const std::size_t n = static_cast<std::size_t>(spec.n > 0 ? spec.n : d.uniform(1, spec.max_n));
  const std::size_t m = static_cast<std::size_t>(spec.m > 0 ? spec.m : d.uniform(1, spec.max_m));
  const ConePtr cone = random_cone(d, m);

  XDomain dom = XDomain::box(Vec(n, Rational(-2)), Vec(n, Rational(2)));
  if (d.uniform(0, 1) == 1) {
    Vec g = d.vec(n, -1, 1, 1);
    if (!is_zero(g)) dom.rows.push_back({g, Rational(d.uniform(1, 2))});
  }
  Vec x0;
  do {
    x0 = d.vec(n, -1, 1, 2);
  } while (!dom.contains(x0));

  const std::string name = "random:" + std::to_string(seed);
  const bool psi_c = d.uniform(0, 2) < spec.psi_weight;
  HFamilyMap f = [&]() {
    if (psi_c) {
      auto psi = std::make_shared<VectorMap>();
      psi->cone = cone;
      psi->domain = dom;
      for (std::size_t i = 0; i < m; ++i) {
        ConvexComponent c;
        // Non-affine components are C-convex only when every base vertex is
        // nonpositive in that coordinate.
        bool may_bend = true;
        for (const auto& v : cone->base_vertices()) may_bend = may_bend && v[i] <= 0;
        const int pieces = may_bend ? d.uniform(1, spec.max_pieces) : 1;
        for (int p = 0; p < pieces; ++p) c.pieces.push_back(random_piece(d, n));
        psi->components.push_back(std::move(c));
      }
      return epigraphical_extension(name, psi);
    }
    std::vector<MapRow> rows;
    const int k = d.uniform(1, spec.max_rows);
    for (int j = 0; j < k; ++j) {
      std::vector<AffinePiece> pieces;
      const int p = d.uniform(1, spec.max_pieces);
      for (int i = 0; i < p; ++i) pieces.push_back(random_piece(d, n));
      // Some rows ignore x entirely so that ties f(x) = f(x0) occur.
      if (d.uniform(0, 4) == 0) pieces = {AffinePiece{zeros(n), d.rational(-2, 2, 2)}};
      rows.push_back({random_dual_normal(d, *cone), ConcavePWL(std::move(pieces))});
    }
    return HFamilyMap(name, cone, dom, std::move(rows));
  }();

  std::vector<Vec> pts{x0};
  while (static_cast<int>(pts.size()) < spec.testset_size) {
    const int kind = d.uniform(0, 5);
    if (kind == 0) {
      pts.push_back(d.vec(n, -3, 3, 2));  // may leave the domain
    } else if (kind == 1) {
      // Point on the segment towards another test point.
      const Vec& other = pts[static_cast<std::size_t>(d.uniform(0, static_cast<int>(pts.size()) - 1))];
      pts.push_back(add(x0, scaled(frac(d.uniform(1, 3), 4), sub(other, x0))));
    } else {
      pts.push_back(d.vec(n, -2, 2, 2));
    }
  }
  Instance inst = make(name, std::move(f), x0, TestSet::of(std::move(pts)));
  inst.notes.push_back(psi_c ? "epigraphical extension of a random C-convex vector map" : "random H-family map");
  return inst;
}

ParetoSets brute_force_pareto(const VectorMap& psi, const TestSet& t) {
  const OrderingCone& cone = *psi.cone;
  std::vector<Vec> pts;
  for (const auto& x : t.points)
    if (psi.domain.contains(x)) pts.push_back(x);
  std::vector<Vec> values;
  for (const auto& x : pts) values.push_back(psi.value(x));
  ParetoSets out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false, strictly = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Vec diff = sub(values[i], values[j]);
      if (is_zero(diff)) continue;
      if (cone.contains(diff)) dominated = true;
      if (cone.contains_interior(diff)) strictly = true;
    }
    if (!dominated) out.efficient.push_back(pts[i]);
    if (!strictly) out.weakly_efficient.push_back(pts[i]);
  }
  return out;
}

}  // namespace setopt
