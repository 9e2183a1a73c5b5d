#include <doctest.h>

#include "support.hpp"
#include "tropmod/error.hpp"
#include "tropmod/matrix.hpp"

using namespace tropmod;
using namespace tropmod::testing;

namespace {

const Scalar kBot = Scalar::neg_inf();

Matrix mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> r;
  for (const auto& row : rows) r.emplace_back(row);
  return Matrix(r);
}

Vector vec(std::initializer_list<long> xs) {
  std::vector<Scalar> c;
  for (long x : xs) c.emplace_back(x);
  return Vector(std::move(c));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Zero diagonal and every cycle of non-positive weight, so det = 0.
Matrix potential_matrix(Rng& rng, std::size_t n) {
  std::vector<long> p(n);
  for (auto& x : p) x = uniform(rng, -3, 3);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        a(i, j) = Scalar(0L);
      } else if (!coin(rng, 0.15)) {
        a(i, j) = Scalar(Rational(p[i] - p[j]) - q(uniform(rng, 0, 4), 2));
      }
    }
  }
  return a;
}

}  // namespace

TEST_CASE("application and products") {
  const Matrix a = mat({{Scalar(0L), Scalar(-1L)}, {Scalar(-1L), Scalar(0L)}});
  CHECK(mat_apply(Matrix::identity(3), vec({4, -1, 2})) == vec({4, -1, 2}));
  CHECK(mat_apply(a, Vector::bottom(2)).is_bottom());
  CHECK(mat_apply(a, vec({0, -5})) == vec({0, -1}));
  CHECK(mat_mul(a, Matrix::identity(2)) == a);
  CHECK(mat_power(a, 0) == Matrix::identity(2));
  CHECK(code_of([&] { mat_apply(a, vec({0})); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([&] { mat_mul(a, Matrix(3, 3)); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([] { Matrix(2, 3).order(); }) == ErrorCode::SizeMismatch);
}

TEST_CASE("rectangular product") {
  const Matrix a = mat({{Scalar(1L), Scalar(6L), Scalar(2L)}, {Scalar(8L), Scalar(3L), Scalar(4L)}});
  const Matrix b = mat({{Scalar(2L), Scalar(5L)}, {Scalar(3L), Scalar(3L)}, {Scalar(1L), Scalar(6L)}});
  CHECK(mat_mul(a, b) == mat({{Scalar(9L), Scalar(9L)}, {Scalar(10L), Scalar(13L)}}));
}

TEST_CASE("diagonal split") {
  CHECK(delta(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(bar_delta(Matrix::identity(3)) == Matrix(3, 3));
  const Matrix a = mat({{Scalar(1L), Scalar(2L)}, {Scalar(3L), Scalar(4L)}});
  CHECK(delta(a) == mat({{Scalar(1L), kBot}, {kBot, Scalar(4L)}}));
  CHECK(bar_delta(a) == mat({{kBot, Scalar(2L)}, {Scalar(3L), kBot}}));
  Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const Matrix r = random_matrix(rng, 4, -3, 3, 2, 0.2);
    CHECK(mat_join(delta(r), bar_delta(r)) == r);
  }
}

TEST_CASE("determinant examples") {
  CHECK(trop_det(Matrix::identity(4)) == Scalar(0L));
  CHECK(trop_det(mat({{Scalar(0L), Scalar(-1L)}, {Scalar(-1L), Scalar(0L)}})) == Scalar(0L));
  CHECK(trop_det(mat({{Scalar(0L), Scalar(5L)}, {kBot, kBot}})).is_neg_inf());
  CHECK(offdiagonal_permutation_weight(mat({{Scalar(0L), Scalar(-1L)}, {Scalar(-1L), Scalar(0L)}})) == Scalar(-2L));
  CHECK(offdiagonal_permutation_weight(mat({{Scalar(3L)}})).is_neg_inf());
  CHECK(diagonal_weight(mat({{Scalar(1L), Scalar(9L)}, {Scalar(9L), Scalar(2L)}})) == Scalar(3L));
  CHECK(code_of([] { trop_det(Matrix::identity(11)); }) == ErrorCode::OrderTooLarge);
  CHECK(trop_det(Matrix::identity(10)) == Scalar(0L));
}

TEST_CASE("determinant against enumeration and the assignment solver") {
  Rng rng(42);
  for (int k = 0; k < 300; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const Matrix a = random_matrix(rng, n, -5, 5, 3, 0.25);
    CHECK(trop_det(a) == permutation_max(a));
    CHECK(offdiagonal_permutation_weight(a) == permutation_max(a, true));
  }
  for (int k = 0; k < 200; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 8));
    const Matrix a = random_matrix(rng, n, -9, 9, 4);
    CHECK(trop_det(a) == Scalar(hungarian_max(a)));
  }
}

TEST_CASE("power stabilisation examples") {
  const Matrix a = mat({{Scalar(0L), Scalar(-1L)}, {Scalar(-1L), Scalar(0L)}});
  auto s = ff3_stabilize(a);
  CHECK(s.verified);
  CHECK(s.power == a);
  CHECK(ff3_stabilize(Matrix::identity(3)).power == Matrix::identity(3));
  const Matrix b = mat({{Scalar(0L), Scalar(1L)}, {Scalar(-1L), Scalar(0L)}});
  CHECK(mat_mul(b, b) == b);
  CHECK(ff3_stabilize(b).power == b);
  CHECK(code_of([] { ff3_stabilize(mat({{Scalar(1L), Scalar(0L)}, {Scalar(0L), Scalar(0L)}})); }) ==
        ErrorCode::HypothesisViolated);
  CHECK(code_of([] { ff3_stabilize(mat({{Scalar(0L), Scalar(1L)}, {Scalar(1L), Scalar(0L)}})); }) ==
        ErrorCode::HypothesisViolated);
}

TEST_CASE("power stabilisation on random matrices") {
  Rng rng(43);
  int accepted = 0;
  for (int k = 0; k < 400; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    Matrix a = coin(rng, 0.5) ? potential_matrix(rng, n) : random_matrix(rng, n, -3, 1, 2, 0.2);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = Scalar(0L);
    if (trop_det(a) != Scalar(0L)) continue;
    ++accepted;
    const auto s = ff3_stabilize(a);
    CHECK(s.verified);
    CHECK(mat_power(a, n) == mat_power(a, n - 1));
    CHECK(s.power == mat_power(a, n - 1));
  }
  CHECK(accepted > 200);
}

TEST_CASE("dichotomy examples") {
  const Matrix a = mat({{Scalar(0L), Scalar(-1L)}, {Scalar(-1L), Scalar(0L)}});
  const auto c = ff4_solve(a);
  CHECK(c.which == DichotomyCase::I);
  CHECK(c.epsilon == Scalar(1, 2));
  CHECK(c.v == vec({0, 0}));
  CHECK(mat_apply(mat_join(a, mat_scale(*c.epsilon, bar_delta(a))), c.v) == mat_apply(delta(a), c.v));

  const Matrix swap = mat({{kBot, Scalar(0L)}, {Scalar(0L), kBot}});
  const auto d = ff4_solve(swap);
  CHECK(d.which == DichotomyCase::II);
  CHECK_FALSE(d.v.is_bottom());
  CHECK(mat_apply(swap, d.v) == mat_apply(bar_delta(swap), d.v));

  const auto e = ff4_solve(Matrix::identity(3));
  CHECK(e.which == DichotomyCase::I);
  CHECK(e.epsilon == Scalar(1L));
  CHECK(e.v == vec({0, 0, 0}));

  const auto one = ff4_solve(mat({{Scalar(5L)}}));
  CHECK(one.which == DichotomyCase::I);
  CHECK(verify_certificate(mat({{Scalar(5L)}}), one));

  const Matrix cyc = mat({{Scalar(0L), Scalar(2L), kBot}, {kBot, Scalar(0L), Scalar(-1L)}, {Scalar(0L), kBot, Scalar(0L)}});
  const auto f = ff4_solve(cyc);
  CHECK(f.which == DichotomyCase::II);
  CHECK(verify_certificate(cyc, f));
  CHECK(code_of([] { ff4_solve(Matrix::identity(11)); }) == ErrorCode::OrderTooLarge);
}

TEST_CASE("dichotomy on random matrices") {
  Rng rng(44);
  for (int k = 0; k < 1000; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 5));
    const Matrix a = random_matrix(rng, n, -3, 3, 2, 0.2);
    const auto cert = ff4_solve(a);
    CHECK(verify_certificate(a, cert));
    const bool first = offdiagonal_permutation_weight(a) < diagonal_weight(a);
    CHECK((cert.which == DichotomyCase::I) == first);
    if (cert.which == DichotomyCase::I) {
      REQUIRE(cert.epsilon.has_value());
      CHECK(*cert.epsilon > Scalar(0L));
      CHECK(cert.v.is_interior());
    } else {
      CHECK_FALSE(cert.v.is_bottom());
    }
  }
}

TEST_CASE("a tampered certificate is rejected") {
  const Matrix a = mat({{Scalar(0L), Scalar(-1L)}, {Scalar(-1L), Scalar(0L)}});
  auto c = ff4_solve(a);
  c.v = vec({0, 3});
  CHECK_FALSE(verify_certificate(a, c));
  c = ff4_solve(a);
  c.epsilon = Scalar(2L);
  CHECK_FALSE(verify_certificate(a, c));
}

TEST_CASE("linearity and associativity") {
  Rng rng(45);
  for (int k = 0; k < 300; ++k) {
    const Matrix a = random_matrix(rng, 3, -3, 3, 2, 0.2);
    const Matrix b = random_matrix(rng, 3, -3, 3, 2, 0.2);
    const Matrix c = random_matrix(rng, 3, -3, 3, 2, 0.2);
    const Vector v = random_vector(rng, 3, -3, 3, 2, 0.2);
    const Vector w = random_vector(rng, 3, -3, 3, 2, 0.2);
    CHECK(mat_apply(a, join(v, w)) == join(mat_apply(a, v), mat_apply(a, w)));
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    CHECK(mat_mul(Matrix::identity(3), a) == a);
    CHECK(mat_apply(mat_mul(a, b), v) == mat_apply(a, mat_apply(b, v)));
  }
}
