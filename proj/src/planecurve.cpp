#include "tropmod/planecurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "tropmod/error.hpp"

namespace tropmod {

namespace {

struct Term {
  long i = 0;
  long j = 0;
  Rational c;
};

std::vector<Term> bivariate_terms(const Polynomial& f) {
  if (f.nvars() != 2) throw Error(ErrorCode::LengthMismatch, "plane curves need two variables");
  if (f.empty()) throw Error(ErrorCode::EmptyPolynomial, "polynomial has no terms");
  std::vector<Term> out;
  for (const auto& [exp, c] : f.terms()) out.push_back(Term{exp[0], exp[1], c.value()});
  return out;
}

Rational term_value(const Term& t, const PlanePoint& p) { return t.c + t.i * p.x + t.j * p.y; }

std::vector<std::size_t> maximal_terms(const std::vector<Term>& terms, const PlanePoint& p) {
  std::vector<std::size_t> best;
  std::optional<Rational> top;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Rational v = term_value(terms[k], p);
    if (!top || v > *top) {
      top = v;
      best.assign(1, k);
    } else if (v == *top) {
      best.push_back(k);
    }
  }
  return best;
}

Direction primitive(long a, long b) {
  const long g = std::gcd(a, b);
  return g == 0 ? Direction{0, 0} : Direction{a / g, b / g};
}

PlanePoint along(const PlanePoint& p, const Direction& d, const Rational& t) {
  return PlanePoint{p.x + t * d.first, p.y + t * d.second};
}

// Lattice length of the Newton segment dual to an edge through p.
long edge_multiplicity(const std::vector<Term>& terms, const PlanePoint& p) {
  const auto tied = maximal_terms(terms, p);
  long best = 0;
  for (std::size_t a = 0; a < tied.size(); ++a) {
    for (std::size_t b = a + 1; b < tied.size(); ++b) {
      best = std::max(best, std::gcd(terms[tied[a]].i - terms[tied[b]].i, terms[tied[a]].j - terms[tied[b]].j));
    }
  }
  return best;
}

}  // namespace

bool on_curve(const Polynomial& f, const PlanePoint& p) {
  return maximal_terms(bivariate_terms(f), p).size() >= 2;
}

Skeleton skeleton(const Polynomial& f) {
  const auto terms = bivariate_terms(f);
  Skeleton sk;
  const std::size_t t = terms.size();

  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      for (std::size_t c = b + 1; c < t; ++c) {
        const long a11 = terms[a].i - terms[b].i, a12 = terms[a].j - terms[b].j;
        const long a21 = terms[a].i - terms[c].i, a22 = terms[a].j - terms[c].j;
        const long det = a11 * a22 - a12 * a21;
        if (det == 0) continue;
        const Rational r1 = terms[b].c - terms[a].c;
        const Rational r2 = terms[c].c - terms[a].c;
        const PlanePoint p{(r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det};
        const auto top = maximal_terms(terms, p);
        if (std::find(top.begin(), top.end(), a) == top.end()) continue;
        if (std::find(sk.vertices.begin(), sk.vertices.end(), p) == sk.vertices.end()) sk.vertices.push_back(p);
      }
    }
  }
  std::sort(sk.vertices.begin(), sk.vertices.end());

  std::map<std::pair<std::size_t, std::size_t>, Skeleton::Segment> segments;
  std::map<std::pair<std::size_t, Direction>, Skeleton::Ray> rays;
  std::vector<Skeleton::Line> lines;

  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      const long di = terms[a].i - terms[b].i;
      const long dj = terms[a].j - terms[b].j;
      // Tie line: di x + dj y = c_b - c_a.
      const Rational rhs = terms[b].c - terms[a].c;
      const PlanePoint base = di != 0 ? PlanePoint{rhs / di, Rational(0)} : PlanePoint{Rational(0), rhs / dj};
      const Direction d = primitive(-dj, di);

      std::optional<Rational> lo, hi;
      bool empty = false;
      for (std::size_t r = 0; r < t && !empty; ++r) {
        if (r == a || r == b) continue;
        // term_a - term_r along the line = alpha + beta * s >= 0.
        const Rational alpha = term_value(terms[a], base) - term_value(terms[r], base);
        const long beta = (terms[a].i - terms[r].i) * d.first + (terms[a].j - terms[r].j) * d.second;
        if (beta == 0) {
          empty = alpha < 0;
        } else {
          const Rational s = -alpha / beta;
          if (beta > 0) {
            if (!lo || s > *lo) lo = s;
          } else {
            if (!hi || s < *hi) hi = s;
          }
        }
      }
      if (empty || (lo && hi && *lo >= *hi)) continue;

      const Rational dd = d.first * d.first + d.second * d.second;
      std::vector<std::pair<Rational, std::size_t>> stops;
      for (std::size_t v = 0; v < sk.vertices.size(); ++v) {
        const PlanePoint& q = sk.vertices[v];
        if (di * q.x + dj * q.y != rhs) continue;
        const Rational s = ((q.x - base.x) * d.first + (q.y - base.y) * d.second) / dd;
        if ((lo && s < *lo) || (hi && s > *hi)) continue;
        stops.emplace_back(s, v);
      }
      std::sort(stops.begin(), stops.end());
      if ((lo && (stops.empty() || stops.front().first != *lo)) ||
          (hi && (stops.empty() || stops.back().first != *hi))) {
        throw Error(ErrorCode::DegenerateCurve, "edge endpoint is not a vertex for terms " +
                                                    std::to_string(a) + "," + std::to_string(b));
      }

      if (stops.empty()) {
        const long mult = edge_multiplicity(terms, base);
        const bool seen = std::any_of(lines.begin(), lines.end(), [&](const Skeleton::Line& l) {
          return di * l.point.x + dj * l.point.y == rhs && primitive(-dj, di) == l.direction;
        });
        if (!seen) lines.push_back(Skeleton::Line{base, d, mult});
        continue;
      }
      for (std::size_t k = 0; k + 1 < stops.size(); ++k) {
        const Rational mid = (stops[k].first + stops[k + 1].first) / 2;
        const std::size_t from = stops[k].second, to = stops[k + 1].second;
        const auto key = std::minmax(from, to);
        if (segments.count(key)) continue;
        const Direction dir = from == key.first ? d : Direction{-d.first, -d.second};
        segments[key] = Skeleton::Segment{key.first, key.second, dir, edge_multiplicity(terms, along(base, d, mid))};
      }
      if (!lo) {
        const auto& [s, v] = stops.front();
        const Direction back{-d.first, -d.second};
        rays.try_emplace({v, back}, Skeleton::Ray{v, back, edge_multiplicity(terms, along(base, d, s - 1))});
      }
      if (!hi) {
        const auto& [s, v] = stops.back();
        rays.try_emplace({v, d}, Skeleton::Ray{v, d, edge_multiplicity(terms, along(base, d, s + 1))});
      }
    }
  }
  for (auto& [k, seg] : segments) sk.bounded_edges.push_back(seg);
  for (auto& [k, ray] : rays) sk.rays.push_back(ray);
  sk.lines = std::move(lines);

  for (const auto& p : sk.vertices) {
    if (!on_curve(f, p)) throw Error(ErrorCode::DegenerateCurve, "vertex off the curve");
  }
  for (const auto& s : sk.bounded_edges) {
    const PlanePoint mid{(sk.vertices[s.from].x + sk.vertices[s.to].x) / 2,
                         (sk.vertices[s.from].y + sk.vertices[s.to].y) / 2};
    if (!on_curve(f, mid)) throw Error(ErrorCode::DegenerateCurve, "edge midpoint off the curve");
  }
  for (const auto& r : sk.rays) {
    if (!on_curve(f, along(sk.vertices[r.vertex], r.direction, Rational(1)))) {
      throw Error(ErrorCode::DegenerateCurve, "ray point off the curve");
    }
  }
  std::vector<std::size_t> valence(sk.vertices.size(), 0);
  for (const auto& s : sk.bounded_edges) {
    ++valence[s.from];
    ++valence[s.to];
  }
  for (const auto& r : sk.rays) ++valence[r.vertex];
  for (std::size_t v = 0; v < valence.size(); ++v) {
    if (valence[v] < 3) throw Error(ErrorCode::DegenerateCurve, "vertex with fewer than three germs");
  }
  return sk;
}

std::vector<Direction> balancing_defects(const Skeleton& sk) {
  std::vector<Direction> sum(sk.vertices.size(), Direction{0, 0});
  auto push = [&](std::size_t v, const Direction& d, long m) {
    sum[v].first += m * d.first;
    sum[v].second += m * d.second;
  };
  for (const auto& s : sk.bounded_edges) {
    push(s.from, s.direction, s.multiplicity);
    push(s.to, Direction{-s.direction.first, -s.direction.second}, s.multiplicity);
  }
  for (const auto& r : sk.rays) push(r.vertex, r.direction, r.multiplicity);
  return sum;
}

std::size_t betti1(const Skeleton& sk) {
  const std::size_t n = sk.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& s : sk.bounded_edges) {
    const std::size_t a = root(s.from), b = root(s.to);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return sk.bounded_edges.size() + components - n;
}

Polynomial tropicalize(const std::vector<ValuedTerm>& terms) {
  Polynomial f(2);
  for (const auto& t : terms) {
    const Exponent e{t.exponent.first, t.exponent.second};
    if (f.coeff(e).is_finite()) {
      throw Error(ErrorCode::DuplicateExponent, "exponent (" + std::to_string(e[0]) + "," +
                                                    std::to_string(e[1]) + ") appears twice");
    }
    f.set(e, Scalar(Rational(-t.valuation)));
  }
  return f;
}

}  // namespace tropmod
