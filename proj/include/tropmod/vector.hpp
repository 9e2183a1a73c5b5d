#pragma once

// The free module T^n: vectors, their lattice structure, the dual pairing
// and tropical (Laurent) polynomials.

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "tropmod/scalar.hpp"

namespace tropmod {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  /// Every coordinate -inf.
  static Vector bottom(std::size_t n);
  /// Every coordinate 0.
  static Vector zeros(std::size_t n);
  /// i-th coordinate 0, the rest -inf.
  static Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_bottom() const;
  /// True when no coordinate is -inf (the vector lies in F*).
  bool is_interior() const;

  std::string str() const;

  friend bool operator==(const Vector&, const Vector&) = default;
  /// Lexicographic, for stable output ordering only.
  friend bool operator<(const Vector& a, const Vector& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Scalar> coords_;
};

/// Coordinatewise order. Throws LengthMismatch.
bool leq(const Vector& v, const Vector& w);
Vector join(const Vector& v, const Vector& w);
Vector meet(const Vector& v, const Vector& w);
/// a (.) v.
Vector scale(const Scalar& a, const Vector& v);
/// <v, xi> = max_i (v_i + xi_i).
Scalar pairing(const Vector& v, const Vector& xi);
/// Coordinatewise negation on F*. Throws NotInteriorVector.
Vector psi(const Vector& v);
void require_same_length(const Vector& v, const Vector& w);

using Exponent = std::vector<long>;

/// Finite max-plus Laurent polynomial in n variables. Absent terms are -inf.
class Polynomial {
 public:
  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  /// Sets the coefficient of x^exp; -inf removes the term. Throws LengthMismatch.
  void set(const Exponent& exp, const Scalar& coeff);
  /// Tropical sum into the existing coefficient.
  void accumulate(const Exponent& exp, const Scalar& coeff);
  Scalar coeff(const Exponent& exp) const;

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  /// True when every exponent sums to degree.
  bool is_homogeneous(long degree) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_;
  std::map<Exponent, Scalar> terms_;
};

Polynomial poly_product(const Polynomial& f, const Polynomial& g);
Polynomial poly_sum(const Polynomial& f, const Polynomial& g);

/// max over terms of (coeff + <exp, v>). Throws NegativePowerOfBottom.
Scalar poly_eval(const Polynomial& f, const Vector& v);

/// Membership in { v : m <v, p> <= q(v) } with q homogeneous of degree m.
/// p may carry -inf coordinates (it is any linear functional). Throws NotHomogeneous.
bool predicate_membership(const Vector& p, const Polynomial& q, long m, const Vector& v);

/// One defining inequality m <v, p> <= q(v).
struct Predicate {
  Vector functional;
  Polynomial bound;
  long degree = 1;
};

/// Intersection of predicate submodules; the only handle on modules that are
/// not finitely generated.
struct PredicateModule {
  std::size_t ambient = 0;
  std::vector<Predicate> predicates;

  bool contains(const Vector& v) const;
};

}  // namespace tropmod
