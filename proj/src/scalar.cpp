#include "tropmod/scalar.hpp"

#include <cctype>

#include "tropmod/error.hpp"

namespace tropmod {

namespace {

bool is_integer_text(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar::Scalar(long num, long den) : finite_(true), value_(num, den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

const Rational& Scalar::value() const {
  if (!finite_) throw Error(ErrorCode::InvalidArgument, "value() of -inf");
  return value_;
}

std::string Scalar::str() const { return finite_ ? format_rational(value_) : "-inf"; }

Scalar Scalar::parse(std::string_view text) {
  if (text == "-inf") return Scalar();
  return Scalar(parse_rational(text));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Scalar::hash() const {
  if (!finite_) return 0x9e3779b97f4a7c15ULL;
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b9 + (h1 << 6) + (h1 >> 2));
}

Scalar add(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }

Scalar mul(const Scalar& a, const Scalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return Scalar::neg_inf();
  return Scalar(Rational(a.value() + b.value()));
}

Scalar div(const Scalar& a, const Scalar& b) {
  if (b.is_neg_inf()) throw Error(ErrorCode::DivisionByZeroElement, "division by -inf");
  if (a.is_neg_inf()) return a;
  return Scalar(Rational(a.value() - b.value()));
}

Scalar root(const Scalar& a, long m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "root order must be >= 1");
  if (a.is_neg_inf()) return a;
  return Scalar(Rational(a.value() / m));
}

Scalar power(const Scalar& a, long m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "negative power; use div");
  if (m == 0) return Scalar::one();
  if (a.is_neg_inf()) return a;
  return Scalar(Rational(a.value() * m));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tropmod
