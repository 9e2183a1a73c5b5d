#pragma once

// Tropical plane curves V(f) of bivariate Laurent polynomials: corner locus
// membership, the embedded graph, its first Betti number, and
// tropicalization of valued coefficients.

#include <cstddef>
#include <utility>
#include <vector>

#include "tropmod/scalar.hpp"
#include "tropmod/vector.hpp"

namespace tropmod {

struct PlanePoint {
  Rational x{0};
  Rational y{0};

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
  friend bool operator<(const PlanePoint& a, const PlanePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

/// Primitive integer direction.
using Direction = std::pair<long, long>;

struct Skeleton {
  struct Segment {
    std::size_t from = 0;
    std::size_t to = 0;
    Direction direction;  ///< primitive, pointing from -> to
    long multiplicity = 1;
  };
  struct Ray {
    std::size_t vertex = 0;
    Direction direction;
    long multiplicity = 1;
  };
  /// A component with no vertex: the whole line through point.
  struct Line {
    PlanePoint point;
    Direction direction;
    long multiplicity = 1;
  };

  std::vector<PlanePoint> vertices;
  std::vector<Segment> bounded_edges;
  std::vector<Ray> rays;
  std::vector<Line> lines;
};

/// True when at least two monomials attain the maximum at p.
/// Throws EmptyPolynomial, LengthMismatch for a non-bivariate f.
bool on_curve(const Polynomial& f, const PlanePoint& p);

/// Vertices (points where the maximal exponents span a 2-cell), bounded
/// edges, rays and vertex-free lines of V(f), in sorted order. Every piece
/// is re-checked with on_curve; a failed self-check raises DegenerateCurve.
Skeleton skeleton(const Polynomial& f);

/// Sum over germs at each vertex of multiplicity * direction; all zero for a
/// balanced curve.
std::vector<Direction> balancing_defects(const Skeleton& sk);

/// |bounded edges| - |vertices| + |connected components|.
std::size_t betti1(const Skeleton& sk);

struct ValuedTerm {
  std::pair<long, long> exponent;
  Rational valuation;
};

/// (+) -val(c_ij) (.) i x (.) j y. Throws DuplicateExponent.
Polynomial tropicalize(const std::vector<ValuedTerm>& terms);

}  // namespace tropmod
