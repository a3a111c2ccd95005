#include "setopt/polyhedron.hpp"

#include <algorithm>
#include <map>

#include "setopt/cone.hpp"
#include "setopt/lp.hpp"

namespace setopt::poly {

namespace {

LinearProgram as_lp(const std::vector<HalfSpace>& rows, std::size_t dim, const Vec& objective) {
  LinearProgram lp;
  lp.objective = objective;
  lp.maximize = true;
  for (const auto& h : rows) {
    require(h.normal.size() == dim, "row dimension mismatch");
    lp.add_row(h.normal, RowSense::Leq, h.offset);
  }
  return lp;
}

}  // namespace

ExtReal maximize(const std::vector<HalfSpace>& rows, std::size_t dim, const Vec& objective) {
  require(objective.size() == dim, "maximize: objective dimension mismatch");
  const LpOutcome out = solve_lp(as_lp(rows, dim, objective));
  switch (out.status) {
    case LpStatus::Infeasible:
      return ExtReal::minus_inf();
    case LpStatus::Unbounded:
      return ExtReal::plus_inf();
    case LpStatus::Optimal:
      break;
  }
  return ExtReal(out.value);
}

bool feasible(const std::vector<HalfSpace>& rows, std::size_t dim) {
  return !maximize(rows, dim, zeros(dim)).is_minus_inf();
}

std::vector<HalfSpace> normalize(const std::vector<HalfSpace>& rows) {
  std::map<Vec, Rational> tightest;
  std::vector<HalfSpace> infeasible;
  for (const auto& h : rows) {
    if (is_zero(h.normal)) {
      if (h.offset < 0) infeasible.push_back(h);
      continue;
    }
    const Rational f = primitive_scale(h.normal);
    Vec n = scaled(f, h.normal);
    Rational c = f * h.offset;
    auto it = tightest.find(n);
    if (it == tightest.end()) tightest.emplace(std::move(n), std::move(c));
    else if (c < it->second) it->second = c;
  }
  std::vector<HalfSpace> out;
  if (!infeasible.empty()) out.push_back(infeasible.front());
  for (auto& [n, c] : tightest) out.push_back({n, c});
  return out;
}

std::vector<HalfSpace> remove_redundant(const std::vector<HalfSpace>& rows, std::size_t dim) {
  std::vector<HalfSpace> kept = normalize(rows);
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<HalfSpace> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    const ExtReal best = maximize(others, dim, kept[i].normal);
    if (!best.is_plus_inf() && best <= ExtReal(kept[i].offset)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return kept;
}

namespace {
Vec primitive_of(const Vec& v) { return scaled(primitive_scale(v), v); }
}  // namespace

ConeGenerators cone_generators(const std::vector<Vec>& rows_in, std::size_t dim) {
  std::vector<Vec> rows;
  for (const auto& r : rows_in) {
    if (is_zero(r)) continue;
    Vec p = primitive_of(r);
    if (std::find(rows.begin(), rows.end(), p) == rows.end()) rows.push_back(std::move(p));
  }
  ConeGenerators out;
  out.lineality = nullspace(rows, dim);
  const std::size_t r = dim - out.lineality.size();
  if (r == 0) return out;
  const std::size_t n = rows.size();
  const std::size_t k = r - 1;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<Vec> system = out.lineality;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) system.push_back(rows[i]);
    const auto ns = nullspace(std::move(system), dim);
    if (ns.size() != 1) continue;
    for (int sign : {1, -1}) {
      const Vec d = primitive_of(scaled(Rational(sign), ns.front()));
      bool ok = true;
      for (const auto& row : rows) {
        if (dot(row, d) > 0) {
          ok = false;
          break;
        }
      }
      if (ok && std::find(out.rays.begin(), out.rays.end(), d) == out.rays.end()) out.rays.push_back(d);
    }
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

ConeFacets cone_facets(const ConeGenerators& generators, std::size_t dim) {
  std::vector<Vec> polar = generators.rays;
  for (const auto& l : generators.lineality) {
    polar.push_back(l);
    polar.push_back(scaled(Rational(-1), l));
  }
  auto dual = cone_generators(polar, dim);
  return ConeFacets{std::move(dual.rays), std::move(dual.lineality)};
}

}  // namespace setopt::poly
