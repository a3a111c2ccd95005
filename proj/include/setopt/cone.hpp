#pragma once

#include <memory>
#include <vector>

#include "setopt/rational.hpp"

namespace setopt {

/// Rank of a row set, by exact elimination.
std::size_t rank(std::vector<Vec> rows, std::size_t columns);
/// Basis of { x | r·x = 0 for every r in rows }.
std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t columns);

/// A polyhedral ordering cone C in R^m with nonempty interior, together with
/// its negative dual C- = { z* | z*·c <= 0 for all c in C } and the vertex set
/// of the base B* = { z* in C- | z*·e = -1 } for a fixed interior point e.
class OrderingCone {
 public:
  static std::shared_ptr<const OrderingCone> orthant(std::size_t m);
  static std::shared_ptr<const OrderingCone> orthant(std::size_t m, Vec interior);
  /// C = cone(generators). Throws StructuralError when C has empty interior,
  /// C is the whole space, or `interior` is not an interior point.
  static std::shared_ptr<const OrderingCone> from_generators(std::vector<Vec> generators, Vec interior);

  std::size_t dimension() const { return m_; }
  const std::vector<Vec>& generators() const { return generators_; }
  /// Extreme rays of C-, primitive integer vectors.
  const std::vector<Vec>& dual_rays() const { return dual_rays_; }
  const Vec& interior_point() const { return interior_; }
  /// Vertices of B*: the dual rays rescaled to z*·e = -1.
  const std::vector<Vec>& base_vertices() const { return base_vertices_; }
  bool is_orthant() const { return orthant_; }

  bool contains(const Vec& z) const;            // z in C
  bool contains_interior(const Vec& z) const;   // z in int C
  bool in_dual(const Vec& zstar) const;         // z* in C-
  /// z* in C- \ {0}, rescaled into B*.
  Vec normalize_to_base(const Vec& zstar) const;

  bool same_as(const OrderingCone& other) const;

 private:
  OrderingCone() = default;
  std::size_t m_ = 0;
  std::vector<Vec> generators_;
  std::vector<Vec> dual_rays_;
  Vec interior_;
  std::vector<Vec> base_vertices_;
  bool orthant_ = false;
};

using ConePtr = std::shared_ptr<const OrderingCone>;

}  // namespace setopt
