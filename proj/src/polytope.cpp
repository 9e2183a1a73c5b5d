#include "tropmod/polytope.hpp"

#include <algorithm>

#include "tropmod/error.hpp"

namespace tropmod {

ProjPoint::ProjPoint(const Vector& representative) {
  if (representative.size() == 0 || representative.is_bottom()) {
    throw Error(ErrorCode::InvalidArgument, "bottom vector has no projective point");
  }
  const auto first = std::find_if(representative.begin(), representative.end(),
                                  [](const Scalar& s) { return s.is_finite(); });
  rep_ = scale(Scalar(Rational(-first->value())), representative);
}

Polytope hull(const std::vector<ProjPoint>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "hull of no points");
  const std::size_t n = points.front().dim();
  std::vector<Vector> gens;
  for (const auto& p : points) {
    if (p.dim() != n) {
      throw Error(ErrorCode::DimensionMismatch, "points from TP^" + std::to_string(n) + " and TP^" +
                                                    std::to_string(p.dim()));
    }
    gens.push_back(p.rep());
  }
  return Polytope(points, Submodule(n + 1, std::move(gens)));
}

bool contains_point(const Polytope& p, const ProjPoint& q) {
  if (q.dim() != p.dim()) throw Error(ErrorCode::DimensionMismatch, "point in the wrong TP^n");
  return contains(p.module(), q.rep());
}

LatticeCertificate is_polytrope(const Polytope& p) {
  for (const auto& q : p.points()) {
    if (!q.rep().is_interior()) {
      throw Error(ErrorCode::NotFinitePoints, "point " + q.rep().str() + " has a -inf coordinate");
    }
  }
  return is_lattice_preserving(p.module());
}

namespace {

LatticeCertificate require_polytrope(const Polytope& p) {
  LatticeCertificate cert = is_polytrope(p);
  if (!cert.lattice_preserving) {
    throw Error(ErrorCode::NotPolytrope, "coordinate section " +
                                             std::to_string(*cert.failing_coordinate + 1) +
                                             " has no minimum");
  }
  return cert;
}

}  // namespace

std::vector<ProjPoint> polytrope_vertices(const Polytope& p) {
  const LatticeCertificate cert = require_polytrope(p);
  std::vector<ProjPoint> out;
  for (const auto& v : cert.minima) {
    ProjPoint q(v);
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Bound>> defining_inequalities(const Polytope& p) {
  require_polytrope(p);
  return section_map(p.module()).c;
}

}  // namespace tropmod
