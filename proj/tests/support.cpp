#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace tropmod::testing {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Scalar random_scalar(Rng& rng, long lo, long hi, long den, double p_bottom) {
  if (p_bottom > 0 && coin(rng, p_bottom)) return Scalar::neg_inf();
  return Scalar(uniform(rng, lo * den, hi * den), den);
}

Vector random_vector(Rng& rng, std::size_t n, long lo, long hi, long den, double p_bottom) {
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_scalar(rng, lo, hi, den, p_bottom));
  return Vector(std::move(c));
}

Vector random_interior(Rng& rng, std::size_t n, long lo, long hi, long den) {
  return random_vector(rng, n, lo, hi, den, 0.0);
}

Matrix random_matrix(Rng& rng, std::size_t n, long lo, long hi, long den, double p_bottom) {
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = random_scalar(rng, lo, hi, den, p_bottom);
  }
  return a;
}

Vector random_combination(Rng& rng, const std::vector<Vector>& gens) {
  Vector out = Vector::bottom(gens.front().size());
  for (const auto& g : gens) {
    if (coin(rng, 0.2)) continue;
    out = join(out, scale(random_scalar(rng, -3, 3, 2), g));
  }
  if (out.is_bottom()) out = gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))];
  return out;
}

bool grid_contains(const std::vector<Vector>& gens, const Vector& v) {
  std::vector<Scalar> grid{Scalar::neg_inf()};
  for (long k = -8; k <= 8; ++k) grid.emplace_back(k, 2);
  const std::size_t r = gens.size();
  std::vector<std::size_t> idx(r, 0);
  while (true) {
    Vector acc = Vector::bottom(v.size());
    for (std::size_t h = 0; h < r; ++h) {
      for (std::size_t i = 0; i < v.size(); ++i) acc[i] = add(acc[i], mul(grid[idx[h]], gens[h][i]));
    }
    if (acc == v) return true;
    std::size_t h = 0;
    while (h < r && ++idx[h] == grid.size()) idx[h++] = 0;
    if (h == r) return false;
  }
}

Rational hungarian_max(const Matrix& a) {
  // Minimum-cost assignment on cost = -a, potentials u, v, 1-based.
  const std::size_t n = a.rows();
  auto cost = [&](std::size_t i, std::size_t j) -> Rational { return -a(i - 1, j - 1).value(); };
  std::vector<Rational> u(n + 1, 0), v(n + 1, 0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Rational> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Rational cur = cost(i0, j) - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Rational total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += a(p[j] - 1, j - 1).value();
  return total;
}

Scalar permutation_max(const Matrix& a, bool skip_identity) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Scalar best = Scalar::neg_inf();
  bool identity = true;
  do {
    if (!(identity && skip_identity)) {
      Scalar w(0L);
      for (std::size_t i = 0; i < n; ++i) w = mul(w, a(i, perm[i]));
      best = add(best, w);
    }
    identity = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::vector<Rational>> closure(std::vector<std::vector<Rational>> c) {
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (c[i][k] + c[k][j] < c[i][j]) c[i][j] = c[i][k] + c[k][j];
      }
    }
  }
  return c;
}

std::vector<std::vector<Rational>> random_bounds(Rng& rng, std::size_t n, long hi) {
  std::vector<std::vector<Rational>> c(n + 1, std::vector<Rational>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i != j) c[i][j] = uniform(rng, 0, hi);
    }
  }
  return closure(c);
}

std::vector<ProjPoint> bound_generators(const std::vector<std::vector<Rational>>& cstar) {
  std::vector<ProjPoint> pts;
  for (std::size_t k = 0; k < cstar.size(); ++k) {
    std::vector<Scalar> x;
    for (std::size_t i = 0; i < cstar.size(); ++i) x.emplace_back(Rational(-cstar[k][i]));
    pts.emplace_back(Vector(std::move(x)));
  }
  return pts;
}

bool grid_convex(const std::vector<ProjPoint>& pts) {
  const std::size_t d = pts.front().rep().size();
  std::vector<std::vector<long>> c(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      bool first = true;
      for (const auto& p : pts) {
        const Rational diff = p.rep()[i].value() - p.rep()[j].value();
        const long v = diff.get_num().get_si();
        if (first || v > c[i][j]) c[i][j] = v;
        first = false;
      }
    }
  }
  const Polytope poly = hull(pts);
  std::vector<long> x(d, 0);
  // odometer over x_i in [-c[0][i], c[i][0]], x_0 = 0
  std::vector<long> lo(d), hi(d);
  for (std::size_t i = 1; i < d; ++i) {
    lo[i] = -c[0][i];
    hi[i] = c[i][0];
    x[i] = lo[i];
  }
  while (true) {
    bool inside = true;
    for (std::size_t i = 0; i < d && inside; ++i) {
      for (std::size_t j = 0; j < d && inside; ++j) inside = x[i] - x[j] <= c[i][j];
    }
    if (inside) {
      std::vector<Scalar> s;
      for (auto xi : x) s.emplace_back(xi);
      if (!contains_point(poly, ProjPoint(Vector(std::move(s))))) return false;
    }
    std::size_t i = 1;
    while (i < d && ++x[i] > hi[i]) {
      x[i] = lo[i];
      ++i;
    }
    if (i >= d) return true;
  }
}

bool box_member(const Vector& v, const Scalar& eps, const Vector& x) {
  if (x.is_bottom()) return true;
  if (!x.is_interior()) return false;
  Rational lo = x[0].value() - v[0].value(), hi = lo;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Rational d = x[i].value() - v[i].value();
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo <= eps.value();
}

std::size_t gf2_cycle_rank(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  // rows = edges as bit vectors over vertices; rank by elimination
  std::vector<std::vector<bool>> rows;
  for (auto [a, b] : edges) {
    std::vector<bool> r(vertices, false);
    r[a] = !r[a];
    r[b] = !r[b];
    rows.push_back(r);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < vertices && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][col]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (std::size_t k = 0; k < vertices; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
      }
    }
    ++rank;
  }
  return edges.size() - rank;
}

namespace {

// Integer-slope path from (o, start) to (o + len, end).
void fill_edge(Rng& rng, std::vector<std::pair<Rational, Rational>>& bp, Rational o, Rational value,
               const Rational& len, const Rational& end) {
  const Rational stop = o + len;
  for (int k = uniform(rng, 0, 2); k > 0; --k) {
    const Rational step = q(uniform(rng, 1, 2), 2);
    if (o + step >= stop - q(1, 2)) break;
    value += uniform(rng, -2, 2) * step;
    o += step;
    bp.emplace_back(o, value);
  }
  const Rational rest = stop - o;
  const Rational mean = (end - value) / rest;
  mpz_class fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), mean.get_num_mpz_t(), mean.get_den_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), mean.get_num_mpz_t(), mean.get_den_mpz_t());
  const long s1 = ce.get_si() + uniform(rng, 0, 1);
  const long s2 = fl.get_si() - uniform(rng, 0, 1);
  if (s1 != s2) {
    const Rational a = (end - value - s2 * rest) / Rational(s1 - s2);
    if (a > 0 && a < rest) bp.emplace_back(o + a, value + s1 * a);
  }
  bp.emplace_back(stop, end);
}

}  // namespace

RationalFunction random_function(Rng& rng, const MetricGraph& g) {
  std::vector<Rational> vv;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) vv.emplace_back(uniform(rng, -3, 3));
  std::vector<EdgeFunction> edges;
  for (const auto& e : g.edges()) {
    EdgeFunction ef;
    ef.breakpoints.emplace_back(Rational(0), vv[e.u]);
    if (e.is_ray()) {
      Rational o = 0, value = vv[e.u];
      for (int k = uniform(rng, 0, 2); k > 0; --k) {
        const Rational step = q(uniform(rng, 1, 3), 2);
        value += uniform(rng, -2, 2) * step;
        o += step;
        ef.breakpoints.emplace_back(o, value);
      }
      ef.tail_slope = uniform(rng, -2, 2);
    } else {
      fill_edge(rng, ef.breakpoints, Rational(0), vv[e.u], *e.length, vv[*e.v]);
    }
    edges.push_back(std::move(ef));
  }
  return RationalFunction::from_edges(g, std::move(vv), std::move(edges));
}

MetricGraph random_compact_graph(Rng& rng, std::size_t max_vertices) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_vertices)));
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.push_back(Edge{static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(v) - 1)), v, Rational(uniform(rng, 1, 3))});
  }
  for (int k = uniform(rng, n == 1 ? 1 : 0, 3); k > 0; --k) {
    const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    const auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    edges.push_back(Edge{a, b, Rational(uniform(rng, 1, 3))});
  }
  return MetricGraph(n, std::move(edges));
}

CurvePoint random_point(Rng& rng, const MetricGraph& g) {
  if (coin(rng, 0.3)) return CurvePoint::at_vertex(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g.vertex_count()) - 1)));
  const auto e = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(g.edges().size()) - 1));
  const Edge& edge = g.edge(e);
  if (edge.is_ray()) return CurvePoint::on_edge(e, q(uniform(rng, 1, 8), 2));
  const Rational twice(2 * *edge.length);
  long top = twice.get_num().get_si() / twice.get_den().get_si();
  if (twice.get_den() == 1) --top;
  if (top < 1) return CurvePoint::on_edge(e, Rational(*edge.length / 2));
  return CurvePoint::on_edge(e, q(uniform(rng, 1, top), 2));
}

}  // namespace tropmod::testing
