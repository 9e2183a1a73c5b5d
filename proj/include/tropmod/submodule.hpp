#pragma once

// Finitely generated submodules of T^n. Everything here runs through
// residuation: the largest multiple of a generator lying below a vector.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tropmod/matrix.hpp"
#include "tropmod/scalar.hpp"
#include "tropmod/vector.hpp"

namespace tropmod {

/// Span of a generator list in T^n. Bottom generators are allowed; they
/// contribute nothing. An all-bottom list is the zero module.
class Submodule {
 public:
  Submodule(std::size_t ambient, std::vector<Vector> generators);

  std::size_t ambient() const noexcept { return ambient_; }
  const std::vector<Vector>& generators() const noexcept { return generators_; }
  /// Generators with bottom vectors removed.
  std::vector<Vector> nonzero_generators() const;
  bool is_zero() const;

 private:
  std::size_t ambient_;
  std::vector<Vector> generators_;
};

/// Largest a with a (.) w <= v: min over finite w_i of (v_i - w_i); -inf for w = bottom.
Scalar residual(const Vector& w, const Vector& v);

/// One residual per generator, in generator order. Throws LengthMismatch.
std::vector<Scalar> residuation_coeffs(const Submodule& m, const Vector& v);
/// Greatest element of M below v.
Vector project(const Submodule& m, const Vector& v);
bool contains(const Submodule& m, const Vector& v);
/// Mutual containment of generators.
bool same_span(const Submodule& a, const Submodule& b);

/// Rescales so the largest finite coordinate is 0. Bottom stays bottom.
Vector normalize_ray(const Vector& v);
/// True when v and w span the same ray.
bool same_ray(const Vector& v, const Vector& w);

/// One normalized representative per extremal ray, sorted lexicographically.
std::vector<Vector> minimal_generators(const Submodule& m);
std::size_t dimension(const Submodule& m);

/// Greatest element of M below both v and w. Throws NotInModule.
Vector inf_in_module(const Submodule& m, const Vector& v, const Vector& w);

struct LatticeCertificate {
  bool lattice_preserving = false;
  /// Minimum of M n {x_i = 0} per coordinate, filled on success.
  std::vector<Vector> minima;
  /// First coordinate without a minimum, on failure.
  std::optional<std::size_t> failing_coordinate;
};

/// Coordinate-section test; requires interior generators (NotInteriorGenerators).
LatticeCertificate is_lattice_preserving(const Submodule& m);
/// Same test without the interior requirement: only generators finite at
/// coordinate i are rescaled. Fails where every generator is -inf at i.
LatticeCertificate coordinate_minima(const Submodule& m);

/// c_{i,j} bound; empty means +inf (no constraint).
using Bound = std::optional<Rational>;

struct SectionMap {
  std::vector<Vector> basis;        ///< minimal_generators(M)
  std::vector<std::size_t> section;  ///< coordinate i -> basis index
  std::vector<std::vector<Bound>> c;  ///< x_j >= x_i - c[i][j]
};

/// Throws NotLatticePreserving.
SectionMap section_map(const Submodule& m);
/// True when x_j >= x_i - c_{i,j} for every finite bound.
bool satisfies_inequalities(const std::vector<std::vector<Bound>>& c, const Vector& x);

/// Closed-form dual element of e: min over finite e_i of (v_i - e_i). Throws BottomBase.
Scalar dual_eval(const Vector& e, const Vector& v);
/// Checks v = (+)_i dual_eval(e_i, v) (.) e_i on each sample. Throws NotInModule.
bool right_inverse_check(const Submodule& m, const std::vector<Vector>& basis,
                         const std::vector<Vector>& samples);

/// Greatest x with A (.) x <= w. Throws NotInjective when a column is bottom
/// or lies in the span of the other columns.
Vector left_inverse(const Matrix& a, const Vector& w);

struct Triple {
  Vector v1, v2, w;
};

struct StraightnessReport {
  bool holds = true;
  std::optional<Triple> counterexample;
  /// "join-meet" for inf{v1 + v2, w} != inf{v1,w} + inf{v2,w},
  /// "meet-join" for inf{v1,v2} + w != inf{v1 + w, v2 + w}.
  std::string law;
  Vector lhs, rhs;
};

/// Membership test and pairwise infimum of some module.
struct InfimumOracle {
  std::function<bool(const Vector&)> contains;
  std::function<Vector(const Vector&, const Vector&)> inf;
};

/// Both distributive laws on each triple; sound for refutation only.
/// Throws NotInModule when a triple leaves the module.
StraightnessReport straightness_sample_check(const InfimumOracle& module,
                                             const std::vector<Triple>& triples);
StraightnessReport straightness_sample_check(const Submodule& m, const std::vector<Triple>& triples);

}  // namespace tropmod
