#pragma once

// Independent oracles and random generators for the test suites. Nothing in
// here calls the routine it is used to check.

#include <random>
#include <vector>

#include "tropmod/curve.hpp"
#include "tropmod/matrix.hpp"
#include "tropmod/planecurve.hpp"
#include "tropmod/polytope.hpp"
#include "tropmod/submodule.hpp"

namespace tropmod::testing {

using Rng = std::mt19937_64;

/// num / den in lowest terms.
inline Rational q(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Uniform integer in [lo, hi].
long uniform(Rng& rng, long lo, long hi);
bool coin(Rng& rng, double p);

/// k / den with k uniform in [lo*den, hi*den]; -inf with probability p_bottom.
Scalar random_scalar(Rng& rng, long lo, long hi, long den = 1, double p_bottom = 0.0);
Vector random_vector(Rng& rng, std::size_t n, long lo, long hi, long den = 1, double p_bottom = 0.0);
Vector random_interior(Rng& rng, std::size_t n, long lo, long hi, long den = 1);
Matrix random_matrix(Rng& rng, std::size_t n, long lo, long hi, long den = 1, double p_bottom = 0.0);

/// Random tropical combination of the generators (coefficients in [-3,3]).
Vector random_combination(Rng& rng, const std::vector<Vector>& gens);

/// Searches coefficient tuples over {-4, -7/2, ..., 4} u {-inf}.
bool grid_contains(const std::vector<Vector>& gens, const Vector& v);

/// Maximum weight perfect matching by the Hungarian method (finite entries).
Rational hungarian_max(const Matrix& a);
/// Maximum over all permutations, by enumeration.
Scalar permutation_max(const Matrix& a, bool skip_identity = false);

/// Shortest-path closure of x_i - x_j <= c[i][j]; c[i][i] = 0.
std::vector<std::vector<Rational>> closure(std::vector<std::vector<Rational>> c);
/// Random consistent bound system in n+1 coordinates, closed.
std::vector<std::vector<Rational>> random_bounds(Rng& rng, std::size_t n, long hi);
/// Generators of { x : x_i - x_j <= c*[i][j] } as points of TP^n.
std::vector<ProjPoint> bound_generators(const std::vector<std::vector<Rational>>& cstar);

/// Decides ordinary convexity of an integer tropical polytope by checking that
/// every integer point of its bounding alcoved polytope lies in it.
bool grid_convex(const std::vector<ProjPoint>& pts);

/// x lies in R (.) { w : v <= w <= eps (.) v }.
bool box_member(const Vector& v, const Scalar& eps, const Vector& x);

/// Cycle rank |E| - rank over GF(2) of the vertex-edge incidence matrix.
std::size_t gf2_cycle_rank(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Random continuous piecewise linear function with integer slopes on g.
RationalFunction random_function(Rng& rng, const MetricGraph& g);
/// Random connected compact graph with up to max_vertices vertices.
MetricGraph random_compact_graph(Rng& rng, std::size_t max_vertices);
/// Random point of g, a vertex or an interior point at a half-integer offset.
CurvePoint random_point(Rng& rng, const MetricGraph& g);

}  // namespace tropmod::testing
