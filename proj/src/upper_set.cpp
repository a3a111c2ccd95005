#include "setopt/upper_set.hpp"

#include <algorithm>

namespace setopt {

namespace {

void require_same_cone(const UpperSet& a, const UpperSet& b) {
  require(a.cone()->same_as(*b.cone()), "operands live in different spaces G(Z,C)");
}

// A row system certified nonempty: z = s·e with s large enough satisfies
// every row because a_j·e < 0 for a_j in C- \ {0}.
void check_rows(const OrderingCone& cone, const std::vector<HalfSpace>& rows) {
  for (const auto& h : rows) {
    require(h.normal.size() == cone.dimension(), "upper set row dimension mismatch");
    require(!is_zero(h.normal), "upper set row with zero normal");
    require(cone.in_dual(h.normal), "upper set normal outside C-");
  }
}

// Homogenization K_A = { (w, t) | a·w <= c t, t >= 0 }; A = { z | (z, 1) in K_A }.
poly::ConeGenerators homogenized_generators(const UpperSet& a) {
  const std::size_t m = a.dimension();
  std::vector<Vec> rows;
  for (const auto& h : a.rows()) {
    Vec r = h.normal;
    r.push_back(-h.offset);
    rows.push_back(std::move(r));
  }
  Vec t = zeros(m + 1);
  t[m] = -1;
  rows.push_back(std::move(t));
  return poly::cone_generators(rows, m + 1);
}

UpperSet dehomogenize(const ConePtr& cone, const poly::ConeGenerators& gens) {
  const std::size_t m = cone->dimension();
  const auto facets = poly::cone_facets(gens, m + 1);
  std::vector<HalfSpace> rows;
  auto add = [&](const Vec& y) {
    HalfSpace h{Vec(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(m)), -y[m]};
    if (is_zero(h.normal)) {
      require(h.offset >= 0, "dehomogenize: empty result");
      return;
    }
    rows.push_back(std::move(h));
  };
  for (const auto& y : facets.inequalities) add(y);
  for (const auto& e : facets.equalities) {
    add(e);
    add(scaled(Rational(-1), e));
  }
  if (rows.empty()) return UpperSet::whole(cone);
  return UpperSet::from_rows(cone, std::move(rows));
}

UpperSet hull_pair(const UpperSet& a, const UpperSet& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  if (a.is_whole() || b.is_whole()) return UpperSet::whole(a.cone());
  // cl co(A ∪ B) homogenizes to K_A + K_B.
  auto gens = homogenized_generators(a);
  const auto gb = homogenized_generators(b);
  gens.rays.insert(gens.rays.end(), gb.rays.begin(), gb.rays.end());
  gens.lineality.insert(gens.lineality.end(), gb.lineality.begin(), gb.lineality.end());
  return dehomogenize(a.cone(), gens);
}

}  // namespace

UpperSet UpperSet::whole(ConePtr cone) { return UpperSet(std::move(cone), {}, false); }

UpperSet UpperSet::empty(ConePtr cone) { return UpperSet(std::move(cone), {}, true); }

UpperSet UpperSet::cone_set(ConePtr cone) { return translate(cone, zeros(cone->dimension())); }

UpperSet UpperSet::translate(ConePtr cone, const Vec& p) {
  require(p.size() == cone->dimension(), "translate: dimension mismatch");
  std::vector<HalfSpace> rows;
  for (const auto& v : cone->dual_rays()) rows.push_back({v, dot(v, p)});
  return UpperSet(std::move(cone), std::move(rows), false);
}

UpperSet UpperSet::from_rows(ConePtr cone, std::vector<HalfSpace> rows) {
  check_rows(*cone, rows);
  return UpperSet(std::move(cone), std::move(rows), false);
}

bool UpperSet::contains(const Vec& z) const {
  require(z.size() == dimension(), "contains: dimension mismatch");
  if (empty_) return false;
  return std::all_of(rows_.begin(), rows_.end(), [&](const HalfSpace& h) { return dot(h.normal, z) <= h.offset; });
}

UpperSet UpperSet::canonical() const {
  if (empty_ || rows_.empty()) return *this;
  auto rows = poly::remove_redundant(poly::normalize(rows_), dimension());
  std::sort(rows.begin(), rows.end(), [](const HalfSpace& a, const HalfSpace& b) {
    return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
  });
  return UpperSet(cone_, std::move(rows), false);
}

std::string UpperSet::dump() const {
  std::string out;
  if (empty_) {
    for (std::size_t k = 0; k < dimension(); ++k) out += "0 ";
    return out + "<= -1\n";
  }
  const UpperSet c = canonical();
  for (const auto& h : c.rows()) {
    for (const auto& a : h.normal) out += a.get_str() + " ";
    out += "<= " + h.offset.get_str() + "\n";
  }
  return out;
}

bool order_leq(const UpperSet& a, const UpperSet& b) {
  require_same_cone(a, b);
  if (b.is_empty()) return true;
  if (a.is_empty()) return false;
  for (const auto& h : a.rows()) {
    if (support(h.normal, b) > ExtReal(h.offset)) return false;
  }
  return true;
}

bool set_equal(const UpperSet& a, const UpperSet& b) { return order_leq(a, b) && order_leq(b, a); }

UpperSet lattice_inf(const std::vector<UpperSet>& sets, const ConePtr& cone) {
  UpperSet acc = UpperSet::empty(cone);
  for (const auto& s : sets) {
    require_same_cone(acc, s);
    acc = hull_pair(acc, s);
  }
  return acc;
}

UpperSet lattice_sup(const std::vector<UpperSet>& sets, const ConePtr& cone) {
  std::vector<HalfSpace> rows;
  for (const auto& s : sets) {
    require(s.cone()->same_as(*cone), "operands live in different spaces G(Z,C)");
    if (s.is_empty()) return UpperSet::empty(cone);
    rows.insert(rows.end(), s.rows().begin(), s.rows().end());
  }
  if (!poly::feasible(rows, cone->dimension())) return UpperSet::empty(cone);
  return UpperSet::from_rows(cone, std::move(rows));
}

UpperSet oplus(const UpperSet& a, const UpperSet& b) {
  require_same_cone(a, b);
  if (a.is_empty() || b.is_empty()) return UpperSet::empty(a.cone());
  if (a.is_whole() || b.is_whole()) return UpperSet::whole(a.cone());
  const std::size_t m = a.dimension();
  // Points of A + B are pairwise sums of points; rays and lineality are pooled.
  const auto ga = homogenized_generators(a);
  const auto gb = homogenized_generators(b);
  poly::ConeGenerators sum;
  std::vector<Vec> pa, pb;
  auto split = [&](const poly::ConeGenerators& g, std::vector<Vec>& points) {
    for (const auto& r : g.rays) {
      if (r[m] > 0) points.push_back(scaled(1 / r[m], r));
      else sum.rays.push_back(r);
    }
    sum.lineality.insert(sum.lineality.end(), g.lineality.begin(), g.lineality.end());
  };
  split(ga, pa);
  split(gb, pb);
  for (const auto& p : pa)
    for (const auto& q : pb) {
      Vec s = zeros(m + 1);
      for (std::size_t k = 0; k < m; ++k) s[k] = p[k] + q[k];
      s[m] = 1;
      sum.rays.push_back(std::move(s));
    }
  return dehomogenize(a.cone(), sum);
}

UpperSet scale(const Rational& t, const UpperSet& a) {
  require(t >= 0, "scale: negative factor");
  if (t == 0) return UpperSet::cone_set(a.cone());
  if (a.is_empty()) return a;
  std::vector<HalfSpace> rows = a.rows();
  for (auto& h : rows) h.offset *= t;
  return UpperSet::from_rows(a.cone(), std::move(rows));
}

UpperSet inf_residual(const UpperSet& a, const UpperSet& b) {
  require_same_cone(a, b);
  if (b.is_empty()) return UpperSet::whole(a.cone());
  if (a.is_empty()) return UpperSet::empty(a.cone());
  std::vector<HalfSpace> rows;
  for (const auto& h : a.rows()) {
    const ExtReal off = residual(ExtReal(h.offset), support(h.normal, b));
    if (off.is_plus_inf()) continue;
    if (off.is_minus_inf()) return UpperSet::empty(a.cone());
    rows.push_back({h.normal, off.value()});
  }
  return UpperSet::from_rows(a.cone(), std::move(rows));
}

UpperSet recession_cone(const UpperSet& a) {
  if (a.is_empty()) return a;
  std::vector<HalfSpace> rows = a.rows();
  for (auto& h : rows) h.offset = 0;
  return UpperSet::from_rows(a.cone(), std::move(rows));
}

ExtReal support(const Vec& zstar, const UpperSet& a) {
  require(zstar.size() == a.dimension(), "support: dimension mismatch");
  if (a.is_empty()) return ExtReal::minus_inf();
  if (a.is_whole()) return is_zero(zstar) ? ExtReal(0) : ExtReal::plus_inf();
  return poly::maximize(a.rows(), a.dimension(), zstar);
}

bool in_interior(const Vec& z, const UpperSet& a) {
  require(z.size() == a.dimension(), "in_interior: dimension mismatch");
  if (a.is_empty()) return false;
  return std::all_of(a.rows().begin(), a.rows().end(),
                     [&](const HalfSpace& h) { return dot(h.normal, z) < h.offset; });
}

bool subset_of_interior(const UpperSet& a, const UpperSet& b) {
  require_same_cone(a, b);
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  for (const auto& h : b.rows()) {
    if (!(support(h.normal, a) < ExtReal(h.offset))) return false;
  }
  return true;
}

ExtReal ball_margin(const UpperSet& a, const UpperSet& b) {
  require_same_cone(a, b);
  if (a.is_empty()) return ExtReal::plus_inf();
  if (b.is_empty()) return ExtReal::minus_inf();
  ExtReal best = ExtReal::plus_inf();
  for (const auto& h : b.rows()) {
    const ExtReal s = support(h.normal, a);
    if (s.is_plus_inf()) return ExtReal::minus_inf();
    const ExtReal m((h.offset - s.value()) / l1_norm(h.normal));
    if (m < best) best = m;
  }
  return best;
}

UpperSet scalar_reconstruction(const UpperSet& a, const std::vector<Vec>& functionals) {
  if (a.is_empty()) return a;
  std::vector<HalfSpace> rows;
  for (const auto& v : functionals) {
    const ExtReal s = support(v, a);
    if (s.is_plus_inf()) continue;
    rows.push_back({v, s.value()});
  }
  return UpperSet::from_rows(a.cone(), std::move(rows));
}

}  // namespace setopt
