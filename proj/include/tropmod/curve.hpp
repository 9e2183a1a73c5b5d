#pragma once

// Tropical curves as metric graphs: piecewise-linear functions with integer
// slopes, orders and principal divisors, sections of a divisor, and the
// construction bounding r(D) by the dimension of a box submodule of H^0.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tropmod/matrix.hpp"
#include "tropmod/scalar.hpp"
#include "tropmod/vector.hpp"

namespace tropmod {

/// Bounded edge u--v of positive length, or an unbounded ray leaving u.
struct Edge {
  std::size_t u = 0;
  std::optional<std::size_t> v;
  std::optional<Rational> length;

  bool is_ray() const noexcept { return !v.has_value(); }
};

class MetricGraph {
 public:
  /// Throws InvalidArgument when disconnected, a length is not positive, or
  /// an endpoint is out of range.
  MetricGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  bool is_compact() const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

/// The star Gamma_n: one centre (vertex 0) and n+1 arms, arm 0 in direction
/// (1,...,1) and arm i in direction -e_i. Arms are rays when no length is given.
MetricGraph star_graph(std::size_t n, std::optional<Rational> arm_length = std::nullopt);

/// A vertex, or a point strictly inside an edge at the given offset from its start.
struct CurvePoint {
  std::optional<std::size_t> vertex;
  std::size_t edge = 0;
  Rational offset{0};

  static CurvePoint at_vertex(std::size_t v) { return CurvePoint{v, 0, Rational(0)}; }
  static CurvePoint on_edge(std::size_t e, Rational offset) {
    offset.canonicalize();
    return CurvePoint{std::nullopt, e, std::move(offset)};
  }
  bool is_vertex() const noexcept { return vertex.has_value(); }
  std::string str() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b);
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);
};

/// Throws PointOffGraph unless p is a vertex or strictly interior to its edge.
void require_on_graph(const MetricGraph& g, const CurvePoint& p);

/// Restriction of a function to one edge: breakpoints (offset, value) with
/// strictly increasing offsets starting at 0; bounded edges end at their
/// length, rays continue with tail_slope after the last breakpoint.
struct EdgeFunction {
  std::vector<std::pair<Rational, Rational>> breakpoints;
  long tail_slope = 0;

  friend bool operator==(const EdgeFunction&, const EdgeFunction&) = default;
};

/// Piecewise Z-affine function on a metric graph, or the constant -inf.
class RationalFunction {
 public:
  static RationalFunction bottom();
  static RationalFunction constant(const MetricGraph& g, const Rational& c);
  /// Validates integer slopes, continuity at vertices and coverage of each
  /// edge; redundant breakpoints are dropped. Throws InvalidArgument.
  static RationalFunction from_edges(const MetricGraph& g, std::vector<Rational> vertex_values,
                                     std::vector<EdgeFunction> edges);

  bool is_bottom() const noexcept { return bottom_; }
  const std::vector<Rational>& vertex_values() const noexcept { return vertex_values_; }
  const std::vector<EdgeFunction>& edges() const noexcept { return edges_; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
  friend RationalFunction fn_shift(const Scalar& c, const RationalFunction& f);

 private:
  bool bottom_ = true;
  std::vector<Rational> vertex_values_;
  std::vector<EdgeFunction> edges_;
};

/// Upper envelope of affine pieces (value at offset 0, integer slope) over an
/// edge of the given length (nullopt for a ray).
EdgeFunction upper_envelope(std::vector<std::pair<Rational, long>> pieces, std::optional<Rational> length);

/// A Laurent polynomial in n variables restricted to the star Gamma_n.
RationalFunction star_function(const MetricGraph& star, const Polynomial& f);

Scalar evaluate(const MetricGraph& g, const RationalFunction& f, const CurvePoint& p);

/// Pointwise max (tropical sum).
RationalFunction fn_max(const MetricGraph& g, const RationalFunction& f, const RationalFunction& h);
/// Pointwise sum (tropical product).
RationalFunction fn_add(const MetricGraph& g, const RationalFunction& f, const RationalFunction& h);
/// c (.) f.
RationalFunction fn_shift(const Scalar& c, const RationalFunction& f);

/// Sum of outgoing slopes at p. Throws BottomFunction, PointOffGraph.
long order(const MetricGraph& g, const RationalFunction& f, const CurvePoint& p);

/// Finite integer combination of points; zero weights are never stored.
class Divisor {
 public:
  Divisor() = default;

  void add(const CurvePoint& p, long mult);
  long operator[](const CurvePoint& p) const;
  const std::map<CurvePoint, long>& support() const noexcept { return weights_; }
  long degree() const;
  bool is_effective() const;

  friend Divisor operator+(Divisor a, const Divisor& b);
  friend Divisor operator-(Divisor a, const Divisor& b);
  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::map<CurvePoint, long> weights_;
};

Divisor point_divisor(const CurvePoint& p, long mult = 1);

/// (f): orders at vertices and interior breakpoints. Throws BottomFunction.
Divisor principal_divisor(const MetricGraph& g, const RationalFunction& f);

/// f = -inf or (f) + D >= 0.
bool is_section(const MetricGraph& g, const RationalFunction& f, const Divisor& d);

/// a_1 (.) f_1 (+) ... (+) a_r (.) f_r.
RationalFunction combine(const MetricGraph& g, const std::vector<RationalFunction>& fs,
                         const std::vector<Scalar>& coeffs);

/// Checks every listed combination of the sections is again a section of D.
/// Throws NotASection naming the first input that is not a section.
bool module_closure_check(const MetricGraph& g, const std::vector<RationalFunction>& sections,
                          const Divisor& d, const std::vector<std::vector<Scalar>>& coefficient_samples);

/// One vector (f(P_1), ..., f(P_m)) per function, plus per-coordinate offsets.
std::vector<Vector> evaluation_vectors(const MetricGraph& g, const std::vector<RationalFunction>& fs,
                                       const std::vector<CurvePoint>& points,
                                       const std::vector<Rational>& offsets = {});

struct SectionWitness {
  Vector coefficients;
  RationalFunction section;
  /// For each i, an index j != i whose term attains the value at P_i.
  std::vector<std::size_t> attaining_index;
};

struct BoxModule {
  Vector base;
  Scalar epsilon;
  /// base (+ epsilon at coordinate i), one per i.
  std::vector<Vector> generators;
  std::size_t dimension = 0;
  /// alpha(g_i) = (+)_j (g_i)_j (.) f_j, each a section of D.
  std::vector<RationalFunction> image_sections;
};

struct Fe7Result {
  Matrix evaluation;
  DichotomyCertificate certificate;
  std::optional<SectionWitness> witness;
  std::optional<BoxModule> box;
};

/// Generators of T (.) { w : v <= w <= eps (.) v }.
std::vector<Vector> box_generators(const Vector& v, const Scalar& eps);

/// Needs f_i a nonzero section of D - E + P_i, E = P_1 + ... + P_m, with
/// distinct points. Throws PreconditionFailed; every branch is re-verified.
Fe7Result fe7_construct(const MetricGraph& g, const std::vector<RationalFunction>& sections,
                        const std::vector<CurvePoint>& points, const Divisor& d);

}  // namespace tropmod
