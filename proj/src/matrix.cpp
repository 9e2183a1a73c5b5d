#include "tropmod/matrix.hpp"

#include <functional>

#include "tropmod/error.hpp"

namespace tropmod {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(const std::vector<std::vector<Scalar>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::SizeMismatch, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one();
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) throw Error(ErrorCode::SizeMismatch, "no columns");
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != m.rows()) throw Error(ErrorCode::SizeMismatch, "column lengths differ");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::size_t Matrix::order() const {
  if (!is_square()) {
    throw Error(ErrorCode::SizeMismatch,
                "expected a square matrix, got " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return rows_;
}

Vector Matrix::column(std::size_t j) const {
  Vector v = Vector::bottom(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  Vector v = Vector::bottom(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out += ", ";
    out += row(i).str();
  }
  return out + "]";
}

Vector mat_apply(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::SizeMismatch, "matrix/vector sizes differ");
  Vector out = Vector::bottom(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = add(acc, mul(a(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_neg_inf()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = add(out(i, j), mul(a(i, k), b(k, j)));
    }
  }
  return out;
}

Matrix mat_join(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
  }
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = add(a(i, j), b(i, j));
  }
  return out;
}

Matrix mat_scale(const Scalar& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mul(c, a(i, j));
  }
  return out;
}

bool mat_leq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (b(i, j) < a(i, j)) return false;
    }
  }
  return true;
}

Matrix mat_power(const Matrix& a, std::size_t k) {
  Matrix out = Matrix::identity(a.order());
  for (std::size_t i = 0; i < k; ++i) out = mat_mul(out, a);
  return out;
}

Matrix delta(const Matrix& a) {
  const std::size_t n = a.order();
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = a(i, i);
  return out;
}

Matrix bar_delta(const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.order(); ++i) out(i, i) = Scalar::neg_inf();
  return out;
}

namespace {

void require_small(const Matrix& a) {
  if (a.order() > kMaxPermutationOrder) {
    throw Error(ErrorCode::OrderTooLarge, "permutation bound is " +
                                              std::to_string(kMaxPermutationOrder) + ", got order " +
                                              std::to_string(a.order()));
  }
}

// Best assignment weights over all permutations and over non-identity ones,
// by dynamic programming on the set of used columns (rows taken in order).
std::pair<Scalar, Scalar> permutation_weights(const Matrix& a) {
  require_small(a);
  const std::size_t n = a.order();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Scalar> any(full + 1);
  std::vector<Scalar> non_identity(full + 1);
  any[0] = Scalar::one();
  Scalar identity_prefix = Scalar::one();
  for (std::size_t mask = 0; mask < full; ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    const bool is_prefix = mask == (std::size_t{1} << row) - 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t next = mask | (std::size_t{1} << j);
      const Scalar& w = a(row, j);
      any[next] = add(any[next], mul(any[mask], w));
      non_identity[next] = add(non_identity[next], mul(non_identity[mask], w));
      if (is_prefix && j != row) non_identity[next] = add(non_identity[next], mul(identity_prefix, w));
    }
    if (is_prefix) identity_prefix = mul(identity_prefix, a(row, row));
  }
  return {any[full], non_identity[full]};
}

}  // namespace

Scalar trop_det(const Matrix& a) { return permutation_weights(a).first; }

Scalar offdiagonal_permutation_weight(const Matrix& a) { return permutation_weights(a).second; }

Scalar diagonal_weight(const Matrix& a) {
  Scalar acc = Scalar::one();
  for (std::size_t i = 0; i < a.order(); ++i) acc = mul(acc, a(i, i));
  return acc;
}

StabilizedPower ff3_stabilize(const Matrix& a) {
  const std::size_t n = a.order();
  if (delta(a) != Matrix::identity(n)) {
    throw Error(ErrorCode::HypothesisViolated, "diagonal part is not the identity");
  }
  if (trop_det(a) != Scalar::one()) {
    throw Error(ErrorCode::HypothesisViolated, "determinant is " + trop_det(a).str() + ", not 0");
  }
  StabilizedPower out;
  Matrix prev = Matrix::identity(n);
  bool chain = true;
  for (std::size_t r = 1; r < n; ++r) {
    Matrix next = mat_mul(prev, a);
    chain = chain && mat_leq(prev, next);
    prev = std::move(next);
  }
  const Matrix last = mat_mul(prev, a);
  chain = chain && mat_leq(prev, last);
  out.verified = chain && last == prev;
  out.power = std::move(prev);
  return out;
}

bool verify_certificate(const Matrix& a, const DichotomyCertificate& cert) {
  const std::size_t n = a.order();
  if (cert.v.size() != n) return false;
  if (cert.which == DichotomyCase::I) {
    if (!cert.epsilon || !cert.epsilon->is_finite() || cert.epsilon->value() <= 0) return false;
    if (!cert.v.is_interior()) return false;
    const Matrix lhs = mat_join(a, mat_scale(*cert.epsilon, bar_delta(a)));
    return mat_apply(lhs, cert.v) == mat_apply(delta(a), cert.v);
  }
  if (cert.v.is_bottom()) return false;
  return mat_apply(a, cert.v) == mat_apply(bar_delta(a), cert.v);
}

namespace {

// Row i divided by A_ii; requires a finite diagonal.
Matrix normalize_rows(const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Scalar d = a(i, i);
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = div(a(i, j), d);
  }
  return out;
}

// First simple cycle (length >= 2) of off-diagonal weight >= 0, by increasing
// length and then lexicographically, rotated to start at its smallest node.
std::optional<std::vector<std::size_t>> find_nonnegative_cycle(const Matrix& a) {
  const std::size_t n = a.order();
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  std::optional<std::vector<std::size_t>> found;

  std::function<void(std::size_t, const Scalar&)> extend = [&](std::size_t length,
                                                              const Scalar& weight) {
    if (found) return;
    const std::size_t tail = path.back();
    if (path.size() == length) {
      const Scalar closed = mul(weight, a(tail, path.front()));
      if (closed.is_finite() && closed.value() >= 0) found = path;
      return;
    }
    for (std::size_t next = path.front() + 1; next < n && !found; ++next) {
      if (used[next] || a(tail, next).is_neg_inf()) continue;
      used[next] = true;
      path.push_back(next);
      extend(length, mul(weight, a(tail, next)));
      path.pop_back();
      used[next] = false;
    }
  };

  for (std::size_t length = 2; length <= n && !found; ++length) {
    for (std::size_t start = 0; start < n && !found; ++start) {
      path.assign(1, start);
      used.assign(n, false);
      used[start] = true;
      extend(length, Scalar::one());
    }
  }
  return found;
}

}  // namespace

DichotomyCertificate ff4_solve(const Matrix& a) {
  const std::size_t n = a.order();
  require_small(a);
  const Scalar e = offdiagonal_permutation_weight(a);
  const Scalar c = diagonal_weight(a);
  DichotomyCertificate cert;

  if (e < c) {
    cert.which = DichotomyCase::I;
    Rational eps(1);
    if (e.is_finite()) {
      const Rational gap = (c.value() - e.value()) / Rational(static_cast<long>(2 * n));
      if (gap < eps) eps = gap;
    }
    cert.epsilon = Scalar(eps);
    // c finite forces a finite diagonal; row scaling leaves v unchanged.
    const Matrix normalized = normalize_rows(a);
    const Matrix b = mat_join(normalized, mat_scale(*cert.epsilon, bar_delta(normalized)));
    const StabilizedPower stable = ff3_stabilize(b);
    if (!stable.verified) {
      throw Error(ErrorCode::InternalVerificationFailed, "B^n != B^(n-1) for " + b.str());
    }
    cert.v = mat_apply(stable.power, Vector::zeros(n));
  } else {
    cert.which = DichotomyCase::II;
    std::optional<std::size_t> missing;
    for (std::size_t i = 0; i < n && !missing; ++i) {
      if (a(i, i).is_neg_inf()) missing = i;
    }
    if (missing) {
      cert.v = Vector::unit(n, *missing);
    } else {
      const Matrix normalized = normalize_rows(a);
      const auto cycle = find_nonnegative_cycle(normalized);
      if (!cycle) {
        throw Error(ErrorCode::InternalVerificationFailed, "no non-negative cycle in " + a.str());
      }
      // v_{h(m)} = weight of the cycle path from h(m) back to h(0); v_{h(0)} = 0.
      const auto& h = *cycle;
      const std::size_t l = h.size();
      cert.v = Vector::bottom(n);
      Scalar suffix = Scalar::one();
      cert.v[h[0]] = suffix;
      for (std::size_t m = l - 1; m >= 1; --m) {
        suffix = mul(normalized(h[m], h[(m + 1) % l]), suffix);
        cert.v[h[m]] = suffix;
      }
    }
  }

  if (!verify_certificate(a, cert)) {
    throw Error(ErrorCode::InternalVerificationFailed, "certificate failed re-verification for " + a.str());
  }
  return cert;
}

}  // namespace tropmod
