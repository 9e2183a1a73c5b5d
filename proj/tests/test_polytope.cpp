#include <doctest.h>

#include "support.hpp"
#include "tropmod/error.hpp"
#include "tropmod/polytope.hpp"

using namespace tropmod;
using namespace tropmod::testing;

namespace {

const Scalar kBot = Scalar::neg_inf();

ProjPoint pt(std::initializer_list<long> xs) {
  std::vector<Scalar> c;
  for (long x : xs) c.emplace_back(x);
  return ProjPoint(Vector(std::move(c)));
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

std::vector<ProjPoint> random_points(Rng& rng, std::size_t n, std::size_t count, long range) {
  std::vector<ProjPoint> pts;
  for (std::size_t k = 0; k < count; ++k) pts.emplace_back(random_interior(rng, n + 1, -range, range, 1));
  return pts;
}

}  // namespace

TEST_CASE("projective points") {
  CHECK(pt({3, 5}).rep() == vec({0, 2}));
  CHECK(ProjPoint(Vector{kBot, Scalar(2L), Scalar(3L)}).rep() == Vector{kBot, Scalar(0L), Scalar(1L)});
  CHECK(pt({1, 1, 1}) == pt({0, 0, 0}));
  CHECK(pt({0, 2}).dim() == 1);
  CHECK(code_of([] { ProjPoint(Vector::bottom(2)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("hulls") {
  CHECK(dimension(hull({pt({0, 1, 2})}).module()) == 1);
  const Polytope seg = hull({pt({0, 0}), pt({0, 3})});
  CHECK(same_span(seg.module(), Submodule(2, {vec({0, 0}), vec({0, 3})})));
  CHECK(seg.dim() == 1);
  CHECK(code_of([] { hull({pt({0, 0}), pt({0, 0, 0})}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { hull({}); }) == ErrorCode::InvalidArgument);
  CHECK(contains_point(seg, pt({0, 2})));
  CHECK(contains_point(seg, pt({0, 0})));
  CHECK_FALSE(contains_point(seg, pt({1, 0})));
  CHECK(code_of([&] { contains_point(seg, pt({0, 0, 0})); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("hull is idempotent and membership is projective") {
  Rng rng(51);
  for (int k = 0; k < 100; ++k) {
    const auto pts = random_points(rng, 2, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
    const Polytope p = hull(pts);
    std::vector<ProjPoint> samples = pts;
    std::vector<Vector> gens;
    for (const auto& q : pts) gens.push_back(q.rep());
    for (int t = 0; t < 6; ++t) samples.emplace_back(random_combination(rng, gens));
    CHECK(same_span(hull(samples).module(), p.module()));
    for (const auto& q : samples) CHECK(contains_point(p, q));
    const Vector x = random_interior(rng, 3, -3, 3, 2);
    CHECK(contains(p.module(), x) == contains(p.module(), scale(random_scalar(rng, -4, 4, 3), x)));
  }
}

TEST_CASE("polytrope examples agree with the grid oracle") {
  const std::vector<std::vector<ProjPoint>> cases = {
      {pt({0, 0, 0}), pt({0, -1, -2})},
      {pt({0, 0}), pt({0, 3})},
      {pt({0, 0, 0}), pt({0, 2, 0}), pt({0, 0, 2}), pt({0, 2, 2})},
      {pt({0, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})},
      {pt({0, 2, 1})},
      {pt({0, 1, 0}), pt({0, 0, 1})},
  };
  for (const auto& c : cases) CHECK(is_polytrope(hull(c)).lattice_preserving == grid_convex(c));
  CHECK_FALSE(grid_convex({pt({0, 1, 0}), pt({0, 0, 1})}));
  CHECK(is_polytrope(hull({pt({0, -2}), pt({0, 5})})).lattice_preserving);
  CHECK_FALSE(is_polytrope(hull({pt({0, 1, 0}), pt({0, 0, 1})})).lattice_preserving);
  CHECK(code_of([] { is_polytrope(hull({ProjPoint(Vector{Scalar(0L), kBot})})); }) == ErrorCode::NotFinitePoints);
}

TEST_CASE("vertices") {
  CHECK(polytrope_vertices(hull({pt({0, 2, 1})})) == std::vector<ProjPoint>{pt({0, 2, 1})});
  CHECK(polytrope_vertices(hull({pt({0, 0}), pt({0, 3}), pt({0, 1})})) == std::vector<ProjPoint>{pt({0, 0}), pt({0, 3})});
  CHECK(code_of([] { polytrope_vertices(hull({pt({0, 1, 0}), pt({0, 0, 1})})); }) == ErrorCode::NotPolytrope);
}

TEST_CASE("defining inequalities") {
  const auto seg = defining_inequalities(hull({pt({0, 0}), pt({0, 3})}));
  CHECK(seg[1][0] == Bound(Rational(3)));
  CHECK(seg[0][1] == Bound(Rational(0)));
  const auto one = defining_inequalities(hull({pt({0, 2, -1})}));
  const std::vector<long> p{0, 2, -1};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(one[i][j] == Bound(Rational(p[i] - p[j])));
  }
  CHECK(code_of([] { defining_inequalities(hull({pt({0, 1, 0}), pt({0, 0, 1})})); }) ==
        ErrorCode::NotPolytrope);
}

TEST_CASE("random polytropes from bound systems") {
  Rng rng(52);
  for (int k = 0; k < 120; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto c = random_bounds(rng, n, 4);
    const auto pts = bound_generators(c);
    const Polytope p = hull(pts);
    CHECK(grid_convex(pts));
    REQUIRE(is_polytrope(p).lattice_preserving);
    const auto vs = polytrope_vertices(p);
    CHECK(vs.size() <= n + 1);
    CHECK(same_span(hull(vs).module(), p.module()));
    const auto ineq = defining_inequalities(p);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) CHECK(ineq[i][j] == Bound(c[i][j]));
    }
    for (int t = 0; t < 30; ++t) {
      const Vector x = random_interior(rng, n + 1, -5, 5, 2);
      CHECK(satisfies_inequalities(ineq, x) == contains_point(p, ProjPoint(x)));
    }
  }
}

TEST_CASE("random point sets: lattice test against the grid oracle") {
  Rng rng(53);
  int non_convex = 0;
  for (int k = 0; k < 150; ++k) {
    const auto n = static_cast<std::size_t>(uniform(rng, 1, 3));
    const auto pts = random_points(rng, n, static_cast<std::size_t>(uniform(rng, 2, 4)), 2);
    const bool oracle = grid_convex(pts);
    non_convex += oracle ? 0 : 1;
    CHECK(is_polytrope(hull(pts)).lattice_preserving == oracle);
  }
  CHECK(non_convex > 30);
}
