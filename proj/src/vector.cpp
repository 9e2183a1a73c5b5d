#include "tropmod/vector.hpp"

#include <numeric>

#include "tropmod/error.hpp"

namespace tropmod {

Vector Vector::bottom(std::size_t n) { return Vector(std::vector<Scalar>(n)); }

Vector Vector::zeros(std::size_t n) { return Vector(std::vector<Scalar>(n, Scalar::one())); }

Vector Vector::unit(std::size_t n, std::size_t i) {
  Vector v = bottom(n);
  v[i] = Scalar::one();
  return v;
}

bool Vector::is_bottom() const {
  for (const auto& c : coords_) {
    if (c.is_finite()) return false;
  }
  return true;
}

bool Vector::is_interior() const {
  for (const auto& c : coords_) {
    if (c.is_neg_inf()) return false;
  }
  return true;
}

std::string Vector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].str();
  }
  return out + ")";
}

void require_same_length(const Vector& v, const Vector& w) {
  if (v.size() != w.size()) {
    throw Error(ErrorCode::LengthMismatch, "vector lengths " + std::to_string(v.size()) +
                                               " and " + std::to_string(w.size()));
  }
}

bool leq(const Vector& v, const Vector& w) {
  require_same_length(v, w);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (w[i] < v[i]) return false;
  }
  return true;
}

Vector join(const Vector& v, const Vector& w) {
  require_same_length(v, w);
  Vector out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = add(v[i], w[i]);
  return out;
}

Vector meet(const Vector& v, const Vector& w) {
  require_same_length(v, w);
  Vector out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = min(v[i], w[i]);
  return out;
}

Vector scale(const Scalar& a, const Vector& v) {
  Vector out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mul(a, v[i]);
  return out;
}

Scalar pairing(const Vector& v, const Vector& xi) {
  require_same_length(v, xi);
  Scalar acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc = add(acc, mul(v[i], xi[i]));
  return acc;
}

Vector psi(const Vector& v) {
  if (!v.is_interior()) {
    throw Error(ErrorCode::NotInteriorVector, "psi needs finite coordinates, got " + v.str());
  }
  Vector out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(Rational(-v[i].value()));
  return out;
}

void Polynomial::set(const Exponent& exp, const Scalar& coeff) {
  if (exp.size() != nvars_) {
    throw Error(ErrorCode::LengthMismatch, "exponent length does not match variable count");
  }
  if (coeff.is_neg_inf()) {
    terms_.erase(exp);
  } else {
    terms_[exp] = coeff;
  }
}

void Polynomial::accumulate(const Exponent& exp, const Scalar& coeff) {
  set(exp, add(this->coeff(exp), coeff));
}

Scalar Polynomial::coeff(const Exponent& exp) const {
  const auto it = terms_.find(exp);
  return it == terms_.end() ? Scalar::neg_inf() : it->second;
}

bool Polynomial::is_homogeneous(long degree) const {
  for (const auto& [exp, c] : terms_) {
    if (std::accumulate(exp.begin(), exp.end(), 0L) != degree) return false;
  }
  return true;
}

Polynomial poly_product(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::LengthMismatch, "variable counts differ");
  Polynomial out(f.nvars());
  for (const auto& [e1, c1] : f.terms()) {
    for (const auto& [e2, c2] : g.terms()) {
      Exponent e(e1.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      out.accumulate(e, mul(c1, c2));
    }
  }
  return out;
}

Polynomial poly_sum(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::LengthMismatch, "variable counts differ");
  Polynomial out = f;
  for (const auto& [e, c] : g.terms()) out.accumulate(e, c);
  return out;
}

Scalar poly_eval(const Polynomial& f, const Vector& v) {
  if (v.size() != f.nvars()) {
    throw Error(ErrorCode::LengthMismatch, "point has wrong number of coordinates");
  }
  Scalar best;
  for (const auto& [exp, c] : f.terms()) {
    Rational sum = c.value();
    bool bottom = false;
    for (std::size_t j = 0; j < exp.size(); ++j) {
      if (exp[j] == 0) continue;
      if (v[j].is_neg_inf()) {
        if (exp[j] < 0) {
          throw Error(ErrorCode::NegativePowerOfBottom,
                      "negative exponent on a -inf coordinate " + std::to_string(j));
        }
        bottom = true;
        continue;
      }
      sum += exp[j] * v[j].value();
    }
    if (!bottom) best = add(best, Scalar(sum));
  }
  return best;
}

bool predicate_membership(const Vector& p, const Polynomial& q, long m, const Vector& v) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  if (!q.is_homogeneous(m)) {
    throw Error(ErrorCode::NotHomogeneous, "q is not homogeneous of degree " + std::to_string(m));
  }
  return power(pairing(v, p), m) <= poly_eval(q, v);
}

bool PredicateModule::contains(const Vector& v) const {
  if (v.size() != ambient) throw Error(ErrorCode::LengthMismatch, "wrong ambient dimension");
  for (const auto& pred : predicates) {
    if (!predicate_membership(pred.functional, pred.bound, pred.degree, v)) return false;
  }
  return true;
}

}  // namespace tropmod
