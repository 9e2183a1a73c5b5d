#pragma once

// Worked examples used by the `fixtures` command and the test suites: a
// non-finitely generated module with an exact projection, two curves whose
// section modules agree while their ranks differ, and some plane curves.

#include <string>
#include <vector>

#include "tropmod/curve.hpp"
#include "tropmod/submodule.hpp"
#include "tropmod/vector.hpp"

namespace tropmod::fixtures {

/// M = { (a,b,c) : max(a - 1, c) <= b, 2b <= a + c } in T^3.
PredicateModule wedge_module();
/// (2t, t, 0); lies in the wedge module for 0 <= t <= 1.
Vector wedge_ray(const Rational& t);
/// c (.) ray(b - c) (+) (2b - a) (.) ray(a - b) for a finite module point.
Vector wedge_decompose(const Vector& v);
/// Greatest module element below a finite vector u.
Vector wedge_project(const Vector& u);
InfimumOracle wedge_oracle();

/// One vertex, one loop edge of length a, marked point at a/2, D = V + P.
/// sections: constant 0, the dip bottoming out at a/4, the dip at 3a/4.
struct LoopCurve {
  MetricGraph graph;
  Divisor divisor;
  CurvePoint marked;
  CurvePoint q1, q2;
  std::vector<RationalFunction> sections;
};
LoopCurve loop_curve(const Rational& a);

/// Two vertices joined by three edges; marked point at distance b from V1 on
/// the first edge (length 2b), D = V1 + P. sections: constant 0 and the dip
/// on [V1, P] bottoming out at its midpoint.
struct ThetaCurve {
  MetricGraph graph;
  Divisor divisor;
  CurvePoint marked;
  CurvePoint mid;
  std::vector<RationalFunction> sections;
};
ThetaCurve theta_curve(const Rational& b);

/// Published ranks of the two divisors above.
inline constexpr long kLoopRank = 1;
inline constexpr long kThetaRank = 0;

/// 0 (+) x (+) y.
Polynomial tropical_line();
/// (max_i a_i + i x) (.) (max_j b_j + j y) with a_i = -i^2, b_j = -j^2.
Polynomial grid_product(long r, long s);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every worked example, each re-derived from the library.
std::vector<Check> run_corpus();

}  // namespace tropmod::fixtures
