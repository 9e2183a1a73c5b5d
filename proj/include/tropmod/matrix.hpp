#pragma once

// Max-plus matrices, the tropical determinant, the stabilisation lemma for
// matrices with unit diagonal, and the eigen-dichotomy solver.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tropmod/scalar.hpp"
#include "tropmod/vector.hpp"

namespace tropmod {

/// rows x cols max-plus matrix. Most operations want it square.
class Matrix {
 public:
  Matrix() = default;
  /// All entries -inf.
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(const std::vector<std::vector<Scalar>>& rows);

  static Matrix identity(std::size_t n);
  /// Columns are the given vectors (all of equal length).
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  /// Order of a square matrix. Throws SizeMismatch otherwise.
  std::size_t order() const;

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;

  std::string str() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// (A (.) v)_i = max_j (A_ij + v_j). Throws SizeMismatch.
Vector mat_apply(const Matrix& a, const Vector& v);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Entrywise max.
Matrix mat_join(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Scalar& c, const Matrix& a);
/// Entrywise order.
bool mat_leq(const Matrix& a, const Matrix& b);
/// A^{(.)k}, with A^0 = E_n.
Matrix mat_power(const Matrix& a, std::size_t k);

/// Diagonal part.
Matrix delta(const Matrix& a);
/// Off-diagonal part.
Matrix bar_delta(const Matrix& a);

inline constexpr std::size_t kMaxPermutationOrder = 10;

/// max over permutations s of sum_i A_{i s(i)}. Throws OrderTooLarge for n > 10.
Scalar trop_det(const Matrix& a);
/// Same maximum restricted to non-identity permutations (-inf when n = 1).
Scalar offdiagonal_permutation_weight(const Matrix& a);
/// Product of the diagonal entries.
Scalar diagonal_weight(const Matrix& a);

struct StabilizedPower {
  Matrix power;  ///< A^{(.)(n-1)}
  bool verified = false;
};

/// Requires Delta(A) = E_n and det(A) = 0 (HypothesisViolated otherwise).
/// Returns A^{n-1} after checking A^n = A^{n-1} and E <= A <= A^2 <= ...
StabilizedPower ff3_stabilize(const Matrix& a);

enum class DichotomyCase { I, II };

struct DichotomyCertificate {
  DichotomyCase which = DichotomyCase::I;
  Vector v;
  /// Present in case I only, strictly positive.
  std::optional<Scalar> epsilon;
};

/// Entrywise re-check of a certificate against A.
bool verify_certificate(const Matrix& a, const DichotomyCertificate& cert);

/// Case I when e(A) < c(A): finite v, eps > 0 with (A (+) eps Bar(A)) v = Delta(A) v.
/// Case II otherwise: v != bottom with A v = Bar(A) v.
DichotomyCertificate ff4_solve(const Matrix& a);

}  // namespace tropmod
