#pragma once

#include <vector>

#include "setopt/extended_real.hpp"
#include "setopt/rational.hpp"

namespace setopt {

/// normal·z <= offset
struct HalfSpace {
  Vec normal;
  Rational offset;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Exact LP helpers over a raw row system in R^dim.
namespace poly {

/// sup{ objective·z | rows }: -inf when infeasible, +inf when unbounded.
ExtReal maximize(const std::vector<HalfSpace>& rows, std::size_t dim, const Vec& objective);
bool feasible(const std::vector<HalfSpace>& rows, std::size_t dim);

/// Rescales every row to a primitive integer normal, merges parallel
/// duplicates and drops zero rows that hold trivially. Rows with a zero
/// normal and negative offset are kept (they signal infeasibility).
std::vector<HalfSpace> normalize(const std::vector<HalfSpace>& rows);

/// Removes rows implied by the remaining ones (one LP per row).
/// Precondition: the system is feasible.
std::vector<HalfSpace> remove_redundant(const std::vector<HalfSpace>& rows, std::size_t dim);

/// Generators of the cone { y | r·y <= 0 for every r in rows } in R^dim:
/// extreme rays of the pointed part (primitive, inside the orthogonal
/// complement of the lineality space) and a lineality basis.
struct ConeGenerators {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};
ConeGenerators cone_generators(const std::vector<Vec>& rows, std::size_t dim);

/// Irredundant description of cone(rays) + span(lineality) as
/// { y | r·y <= 0 } (inequalities) and { y | e·y = 0 } (equalities).
struct ConeFacets {
  std::vector<Vec> inequalities;
  std::vector<Vec> equalities;
};
ConeFacets cone_facets(const ConeGenerators& generators, std::size_t dim);

}  // namespace poly
}  // namespace setopt
