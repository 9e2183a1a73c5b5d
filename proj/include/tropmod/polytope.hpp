#pragma once

// Tropical polytopes in the projective space TP^n and polytrope detection.

#include <cstddef>
#include <vector>

#include "tropmod/submodule.hpp"
#include "tropmod/vector.hpp"

namespace tropmod {

/// A point of TP^n stored by its representative with first finite coordinate 0.
class ProjPoint {
 public:
  /// Throws InvalidArgument for the bottom vector.
  explicit ProjPoint(const Vector& representative);

  const Vector& rep() const noexcept { return rep_; }
  /// n for a point of TP^n.
  std::size_t dim() const noexcept { return rep_.size() - 1; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.rep_ < b.rep_; }

 private:
  Vector rep_;
};

class Polytope {
 public:
  Polytope(std::vector<ProjPoint> points, Submodule module)
      : points_(std::move(points)), module_(std::move(module)) {}

  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  /// The cone over the polytope in T^{n+1}.
  const Submodule& module() const noexcept { return module_; }
  std::size_t dim() const noexcept { return module_.ambient() - 1; }

 private:
  std::vector<ProjPoint> points_;
  Submodule module_;
};

/// Tropical convex hull. Throws DimensionMismatch, InvalidArgument for no points.
Polytope hull(const std::vector<ProjPoint>& points);
bool contains_point(const Polytope& p, const ProjPoint& q);

/// Lattice-preserving test of the cone; by the tropical/ordinary convexity
/// criterion this decides whether the polytope is a polytrope.
/// Throws NotFinitePoints when a representative has a -inf coordinate.
LatticeCertificate is_polytrope(const Polytope& p);

/// At most n+1 vertices of a polytrope, deduplicated and sorted. Throws NotPolytrope.
std::vector<ProjPoint> polytrope_vertices(const Polytope& p);

/// (n+1)x(n+1) bounds with x_j >= x_i - c_{i,j}. Throws NotPolytrope.
std::vector<std::vector<Bound>> defining_inequalities(const Polytope& p);

}  // namespace tropmod
