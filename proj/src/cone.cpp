#include "setopt/cone.hpp"

#include <algorithm>

#include "setopt/lp.hpp"

namespace setopt {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational lead = rows[r][c];
    for (auto& v : rows[r]) v /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < columns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Vec primitive(const Vec& v) { return scaled(primitive_scale(v), v); }

}  // namespace

std::size_t rank(std::vector<Vec> rows, std::size_t columns) { return rref(rows, columns).size(); }

std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t columns) {
  const auto pivots = rref(rows, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vec x = zeros(columns);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::shared_ptr<const OrderingCone> OrderingCone::orthant(std::size_t m) {
  return orthant(m, Vec(m, Rational(1)));
}

std::shared_ptr<const OrderingCone> OrderingCone::orthant(std::size_t m, Vec interior) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < m; ++i) {
    Vec g = zeros(m);
    g[i] = 1;
    gens.push_back(std::move(g));
  }
  auto cone = from_generators(std::move(gens), std::move(interior));
  auto copy = std::shared_ptr<OrderingCone>(new OrderingCone(*cone));
  copy->orthant_ = true;
  return copy;
}

std::shared_ptr<const OrderingCone> OrderingCone::from_generators(std::vector<Vec> generators, Vec interior) {
  require(!generators.empty(), "ordering cone needs at least one generator");
  const std::size_t m = generators.front().size();
  require(m > 0, "ordering cone dimension must be positive");
  for (const auto& g : generators) require(g.size() == m && !is_zero(g), "bad cone generator");
  require(interior.size() == m, "interior point dimension mismatch");
  require(rank(generators, m) == m, "ordering cone must have nonempty interior");

  // Extreme rays of the pointed cone { y | g·y <= 0 } come from m-1 independent tight rows.
  std::vector<Vec> rays;
  const std::size_t p = generators.size();
  const std::size_t choose = m - 1;
  std::vector<bool> mask(p, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(choose, p)), true);
  if (choose <= p) {
    do {
      std::vector<Vec> tight;
      for (std::size_t i = 0; i < p; ++i) {
        if (mask[i]) tight.push_back(generators[i]);
      }
      const auto ns = nullspace(tight, m);
      if (ns.size() != 1) continue;
      for (int sign : {1, -1}) {
        Vec d = scaled(Rational(sign), ns.front());
        bool ok = true;
        for (const auto& g : generators) {
          if (dot(g, d) > 0) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        d = primitive(d);
        if (std::find(rays.begin(), rays.end(), d) == rays.end()) rays.push_back(d);
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  require(!rays.empty(), "ordering cone must not be the whole space");
  std::sort(rays.begin(), rays.end());

  auto cone = std::shared_ptr<OrderingCone>(new OrderingCone());
  cone->m_ = m;
  cone->generators_ = std::move(generators);
  cone->dual_rays_ = rays;
  cone->interior_ = interior;

  // The interior must be certified through the dual description.
  std::vector<RowSense> senses(rays.size(), RowSense::Leq);
  const auto strict = strictly_feasible(rays, senses, zeros(rays.size()), m);
  require(strict.feasible, "ordering cone has empty interior");
  for (const auto& v : rays) {
    require(dot(v, interior) < 0, "given point is not in the interior of the ordering cone");
    cone->base_vertices_.push_back(scaled(Rational(-1) / dot(v, interior), v));
  }
  return cone;
}

bool OrderingCone::contains(const Vec& z) const {
  require(z.size() == m_, "cone membership: dimension mismatch");
  return std::all_of(dual_rays_.begin(), dual_rays_.end(), [&](const Vec& v) { return dot(v, z) <= 0; });
}

bool OrderingCone::contains_interior(const Vec& z) const {
  require(z.size() == m_, "cone membership: dimension mismatch");
  return std::all_of(dual_rays_.begin(), dual_rays_.end(), [&](const Vec& v) { return dot(v, z) < 0; });
}

bool OrderingCone::in_dual(const Vec& zstar) const {
  require(zstar.size() == m_, "dual membership: dimension mismatch");
  return std::all_of(generators_.begin(), generators_.end(), [&](const Vec& g) { return dot(g, zstar) <= 0; });
}

Vec OrderingCone::normalize_to_base(const Vec& zstar) const {
  require(in_dual(zstar) && !is_zero(zstar), "functional is not in C- \\ {0}");
  return scaled(Rational(-1) / dot(zstar, interior_), zstar);
}

bool OrderingCone::same_as(const OrderingCone& other) const {
  return this == &other || (m_ == other.m_ && dual_rays_ == other.dual_rays_ && interior_ == other.interior_);
}

}  // namespace setopt
