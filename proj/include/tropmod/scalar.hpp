#pragma once

// Exact arithmetic in the max-plus semifield Q u {-inf}.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace tropmod {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws ParseError.
Rational parse_rational(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Element of the tropical semifield: either -inf or an exact rational.
/// Rationals are kept in lowest terms so equality is structural.
class Scalar {
 public:
  /// Default is the tropical zero, -inf.
  Scalar() = default;
  Scalar(long v) : finite_(true), value_(v) {}
  Scalar(const Rational& v) : finite_(true), value_(v) { value_.canonicalize(); }
  Scalar(long num, long den);

  static Scalar neg_inf() { return Scalar(); }
  /// The tropical unit (ordinary 0).
  static Scalar one() { return Scalar(0L); }

  bool is_finite() const noexcept { return finite_; }
  bool is_neg_inf() const noexcept { return !finite_; }
  /// Rational value; throws InvalidArgument for -inf.
  const Rational& value() const;

  std::string str() const;
  static Scalar parse(std::string_view text);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::size_t hash() const;

 private:
  bool finite_ = false;
  Rational value_{0};
};

/// a (+) b = max(a, b).
Scalar add(const Scalar& a, const Scalar& b);
/// a (.) b = a + b, absorbing -inf.
Scalar mul(const Scalar& a, const Scalar& b);
/// a (/) b = a - b. Throws DivisionByZeroElement when b = -inf.
Scalar div(const Scalar& a, const Scalar& b);
/// The unique b with b^{(.)m} = a, i.e. a / m. Throws InvalidArgument for m < 1.
Scalar root(const Scalar& a, long m);
/// a^{(.)m} = m * a for m >= 0.
Scalar power(const Scalar& a, long m);

Scalar min(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tropmod

template <>
struct std::hash<tropmod::Scalar> {
  std::size_t operator()(const tropmod::Scalar& s) const { return s.hash(); }
};
