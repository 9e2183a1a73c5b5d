#include "tropmod/curve.hpp"

#include <algorithm>
#include <numeric>

#include "tropmod/error.hpp"
#include "tropmod/submodule.hpp"

namespace tropmod {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Rational segment_slope(const std::pair<Rational, Rational>& a, const std::pair<Rational, Rational>& b) {
  return (b.second - a.second) / (b.first - a.first);
}

long as_integer_slope(const Rational& s) {
  if (s.get_den() != 1 || !s.get_num().fits_slong_p()) {
    throw Error(ErrorCode::InvalidArgument, "slope " + format_rational(s) + " is not an integer");
  }
  return s.get_num().get_si();
}

// Value at an offset inside the edge's parameter range.
Rational value_at(const EdgeFunction& ef, const Rational& o) {
  const auto& bp = ef.breakpoints;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    if (o <= bp[k + 1].first) return bp[k].second + segment_slope(bp[k], bp[k + 1]) * (o - bp[k].first);
  }
  return bp.back().second + ef.tail_slope * (o - bp.back().first);
}

// Slope on [o, o + delta).
long slope_right(const EdgeFunction& ef, const Rational& o) {
  const auto& bp = ef.breakpoints;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    if (o < bp[k + 1].first) return as_integer_slope(segment_slope(bp[k], bp[k + 1]));
  }
  return ef.tail_slope;
}

// Slope on (o - delta, o].
long slope_left(const EdgeFunction& ef, const Rational& o) {
  const auto& bp = ef.breakpoints;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    if (o <= bp[k + 1].first) return as_integer_slope(segment_slope(bp[k], bp[k + 1]));
  }
  return ef.tail_slope;
}

void simplify(EdgeFunction& ef, bool is_ray) {
  auto& bp = ef.breakpoints;
  std::vector<std::pair<Rational, Rational>> kept;
  kept.push_back(bp.front());
  for (std::size_t k = 1; k < bp.size(); ++k) {
    const bool last = k + 1 == bp.size();
    if (!last) {
      if (segment_slope(kept.back(), bp[k]) == segment_slope(bp[k], bp[k + 1])) continue;
    } else if (is_ray && kept.size() >= 1 && segment_slope(kept.back(), bp[k]) == ef.tail_slope) {
      continue;
    }
    kept.push_back(bp[k]);
  }
  bp = std::move(kept);
}

enum class Merge { Max, Sum };

EdgeFunction merge_edge(const EdgeFunction& f, const EdgeFunction& h, bool is_ray, Merge how) {
  std::vector<Rational> offsets;
  for (const auto& [o, v] : f.breakpoints) offsets.push_back(o);
  for (const auto& [o, v] : h.breakpoints) offsets.push_back(o);
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());

  if (how == Merge::Max) {
    std::vector<Rational> crossings;
    auto add_crossing = [&](const Rational& lo, const std::optional<Rational>& hi) {
      const Rational df = value_at(f, lo) - value_at(h, lo);
      const long sf = slope_right(f, lo);
      const long sh = slope_right(h, lo);
      if (sf == sh) return;
      const Rational t = lo - df / Rational(sf - sh);
      if (t > lo && (!hi || t < *hi)) crossings.push_back(t);
    };
    for (std::size_t k = 0; k + 1 < offsets.size(); ++k) add_crossing(offsets[k], offsets[k + 1]);
    if (is_ray) add_crossing(offsets.back(), std::nullopt);
    offsets.insert(offsets.end(), crossings.begin(), crossings.end());
    std::sort(offsets.begin(), offsets.end());
  }

  EdgeFunction out;
  for (const auto& o : offsets) {
    const Rational a = value_at(f, o);
    const Rational b = value_at(h, o);
    out.breakpoints.emplace_back(o, how == Merge::Sum ? Rational(a + b) : (a < b ? b : a));
  }
  if (how == Merge::Sum) {
    out.tail_slope = f.tail_slope + h.tail_slope;
  } else {
    const Rational a = value_at(f, offsets.back());
    const Rational b = value_at(h, offsets.back());
    out.tail_slope = a > b ? f.tail_slope : (a < b ? h.tail_slope : std::max(f.tail_slope, h.tail_slope));
  }
  if (!is_ray) out.tail_slope = 0;
  simplify(out, is_ray);
  return out;
}

RationalFunction merge(const MetricGraph& g, const RationalFunction& f, const RationalFunction& h,
                       Merge how) {
  std::vector<Rational> vertex_values(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const Rational& a = f.vertex_values()[v];
    const Rational& b = h.vertex_values()[v];
    vertex_values[v] = how == Merge::Sum ? Rational(a + b) : (a < b ? b : a);
  }
  std::vector<EdgeFunction> edges;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    edges.push_back(merge_edge(f.edges()[e], h.edges()[e], g.edge(e).is_ray(), how));
  }
  return RationalFunction::from_edges(g, std::move(vertex_values), std::move(edges));
}

void require_graph_function(const MetricGraph& g, const RationalFunction& f) {
  if (f.is_bottom()) return;
  if (f.vertex_values().size() != g.vertex_count() || f.edges().size() != g.edges().size()) {
    throw Error(ErrorCode::InvalidArgument, "function does not belong to this graph");
  }
}

}  // namespace

MetricGraph::MetricGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw Error(ErrorCode::InvalidArgument, "graph needs a vertex");
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (auto& e : edges_) {
    if (e.u >= vertex_count_ || (e.v && *e.v >= vertex_count_)) {
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    }
    if (e.is_ray()) {
      e.length.reset();
      continue;
    }
    if (e.length) e.length->canonicalize();
    if (!e.length || *e.length <= 0) throw Error(ErrorCode::InvalidArgument, "edge length must be positive");
    parent[find_root(parent, e.u)] = find_root(parent, *e.v);
  }
  for (std::size_t v = 1; v < vertex_count_; ++v) {
    if (find_root(parent, v) != find_root(parent, 0)) {
      throw Error(ErrorCode::InvalidArgument, "graph is not connected");
    }
  }
}

bool MetricGraph::is_compact() const {
  return std::none_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_ray(); });
}

MetricGraph star_graph(std::size_t n, std::optional<Rational> arm_length) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "star needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i <= n; ++i) {
    if (arm_length) {
      edges.push_back(Edge{0, i + 1, arm_length});
    } else {
      edges.push_back(Edge{0, std::nullopt, std::nullopt});
    }
  }
  return MetricGraph(arm_length ? n + 2 : 1, std::move(edges));
}

std::string CurvePoint::str() const {
  if (vertex) return "v" + std::to_string(*vertex);
  return "e" + std::to_string(edge) + "@" + format_rational(offset);
}

bool operator==(const CurvePoint& a, const CurvePoint& b) {
  if (a.vertex || b.vertex) return a.vertex == b.vertex;
  return a.edge == b.edge && a.offset == b.offset;
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.vertex && b.vertex) return *a.vertex < *b.vertex;
  if (a.vertex != b.vertex) return a.vertex.has_value();
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.offset < b.offset;
}

void require_on_graph(const MetricGraph& g, const CurvePoint& p) {
  if (p.vertex) {
    if (*p.vertex >= g.vertex_count()) throw Error(ErrorCode::PointOffGraph, "no vertex " + p.str());
    return;
  }
  if (p.edge >= g.edges().size()) throw Error(ErrorCode::PointOffGraph, "no edge for " + p.str());
  const Edge& e = g.edge(p.edge);
  if (p.offset <= 0 || (e.length && p.offset >= *e.length)) {
    throw Error(ErrorCode::PointOffGraph, p.str() + " is not strictly inside its edge");
  }
}

RationalFunction RationalFunction::bottom() { return RationalFunction(); }

RationalFunction RationalFunction::constant(const MetricGraph& g, const Rational& c) {
  std::vector<EdgeFunction> edges;
  for (const auto& e : g.edges()) {
    EdgeFunction ef;
    ef.breakpoints.emplace_back(Rational(0), c);
    if (!e.is_ray()) ef.breakpoints.emplace_back(*e.length, c);
    edges.push_back(std::move(ef));
  }
  return from_edges(g, std::vector<Rational>(g.vertex_count(), c), std::move(edges));
}

RationalFunction RationalFunction::from_edges(const MetricGraph& g, std::vector<Rational> vertex_values,
                                              std::vector<EdgeFunction> edges) {
  if (vertex_values.size() != g.vertex_count() || edges.size() != g.edges().size()) {
    throw Error(ErrorCode::InvalidArgument, "function data does not match the graph");
  }
  for (auto& v : vertex_values) v.canonicalize();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Edge& edge = g.edge(e);
    auto& ef = edges[e];
    for (auto& [o, v] : ef.breakpoints) {
      o.canonicalize();
      v.canonicalize();
    }
    const auto& bp = ef.breakpoints;
    const std::string where = "edge " + std::to_string(e);
    if (bp.empty() || bp.front().first != 0) throw Error(ErrorCode::InvalidArgument, where + ": must start at offset 0");
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
      if (bp[k + 1].first <= bp[k].first) throw Error(ErrorCode::InvalidArgument, where + ": offsets not increasing");
      as_integer_slope(segment_slope(bp[k], bp[k + 1]));
    }
    if (bp.front().second != vertex_values[edge.u]) {
      throw Error(ErrorCode::InvalidArgument, where + ": discontinuous at its start vertex");
    }
    if (!edge.is_ray()) {
      if (bp.size() < 2 || bp.back().first != *edge.length) {
        throw Error(ErrorCode::InvalidArgument, where + ": must end at the edge length");
      }
      if (bp.back().second != vertex_values[*edge.v]) {
        throw Error(ErrorCode::InvalidArgument, where + ": discontinuous at its end vertex");
      }
      ef.tail_slope = 0;
    }
    simplify(ef, edge.is_ray());
  }
  RationalFunction f;
  f.bottom_ = false;
  f.vertex_values_ = std::move(vertex_values);
  f.edges_ = std::move(edges);
  return f;
}

EdgeFunction upper_envelope(std::vector<std::pair<Rational, long>> pieces, std::optional<Rational> length) {
  if (pieces.empty()) throw Error(ErrorCode::InvalidArgument, "envelope of no pieces");
  for (auto& piece : pieces) piece.first.canonicalize();
  if (length) length->canonicalize();
  auto value = [&](std::size_t k, const Rational& t) -> Rational { return pieces[k].first + pieces[k].second * t; };
  auto better = [&](std::size_t a, std::size_t b, const Rational& t) {
    const Rational va = value(a, t);
    const Rational vb = value(b, t);
    return va > vb || (va == vb && pieces[a].second > pieces[b].second);
  };
  Rational t(0);
  std::size_t cur = 0;
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    if (better(k, cur, t)) cur = k;
  }
  EdgeFunction ef;
  ef.breakpoints.emplace_back(t, value(cur, t));
  while (true) {
    std::optional<Rational> next_t;
    std::size_t next = cur;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      if (pieces[k].second <= pieces[cur].second) continue;
      const Rational cross = (pieces[cur].first - pieces[k].first) / Rational(pieces[k].second - pieces[cur].second);
      if (cross < t) continue;
      if (!next_t || cross < *next_t || (cross == *next_t && pieces[k].second > pieces[next].second)) {
        next_t = cross;
        next = k;
      }
    }
    if (!next_t || (length && *next_t >= *length)) break;
    t = *next_t;
    cur = next;
    if (ef.breakpoints.back().first != t) ef.breakpoints.emplace_back(t, value(cur, t));
  }
  if (length) {
    ef.breakpoints.emplace_back(*length, value(cur, *length));
  } else {
    ef.tail_slope = pieces[cur].second;
  }
  simplify(ef, !length.has_value());
  return ef;
}

RationalFunction star_function(const MetricGraph& star, const Polynomial& f) {
  const std::size_t n = f.nvars();
  if (star.edges().size() != n + 1) {
    throw Error(ErrorCode::InvalidArgument, "star arm count does not match the variable count");
  }
  if (f.empty()) return RationalFunction::bottom();
  std::vector<EdgeFunction> edges;
  std::vector<Rational> vertex_values(star.vertex_count());
  for (std::size_t arm = 0; arm <= n; ++arm) {
    std::vector<std::pair<Rational, long>> pieces;
    for (const auto& [exp, c] : f.terms()) {
      long slope = 0;
      if (arm == 0) {
        slope = std::accumulate(exp.begin(), exp.end(), 0L);
      } else {
        slope = -exp[arm - 1];
      }
      pieces.emplace_back(c.value(), slope);
    }
    const auto& len = star.edge(arm).length;
    EdgeFunction ef = upper_envelope(pieces, len);
    vertex_values[0] = ef.breakpoints.front().second;
    if (len) vertex_values[*star.edge(arm).v] = ef.breakpoints.back().second;
    edges.push_back(std::move(ef));
  }
  return RationalFunction::from_edges(star, std::move(vertex_values), std::move(edges));
}

Scalar evaluate(const MetricGraph& g, const RationalFunction& f, const CurvePoint& p) {
  require_on_graph(g, p);
  if (f.is_bottom()) return Scalar::neg_inf();
  require_graph_function(g, f);
  if (p.vertex) return Scalar(f.vertex_values()[*p.vertex]);
  return Scalar(value_at(f.edges()[p.edge], p.offset));
}

RationalFunction fn_max(const MetricGraph& g, const RationalFunction& f, const RationalFunction& h) {
  if (f.is_bottom()) return h;
  if (h.is_bottom()) return f;
  require_graph_function(g, f);
  require_graph_function(g, h);
  return merge(g, f, h, Merge::Max);
}

RationalFunction fn_add(const MetricGraph& g, const RationalFunction& f, const RationalFunction& h) {
  if (f.is_bottom() || h.is_bottom()) return RationalFunction::bottom();
  require_graph_function(g, f);
  require_graph_function(g, h);
  return merge(g, f, h, Merge::Sum);
}

RationalFunction fn_shift(const Scalar& c, const RationalFunction& f) {
  if (c.is_neg_inf() || f.is_bottom()) return RationalFunction::bottom();
  RationalFunction out = f;
  for (auto& v : out.vertex_values_) v += c.value();
  for (auto& ef : out.edges_) {
    for (auto& bp : ef.breakpoints) bp.second += c.value();
  }
  return out;
}

long order(const MetricGraph& g, const RationalFunction& f, const CurvePoint& p) {
  require_on_graph(g, p);
  if (f.is_bottom()) throw Error(ErrorCode::BottomFunction, "order of the -inf function");
  require_graph_function(g, f);
  if (p.vertex) {
    long total = 0;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const Edge& edge = g.edge(e);
      const EdgeFunction& ef = f.edges()[e];
      if (edge.u == *p.vertex) total += slope_right(ef, Rational(0));
      if (edge.v && *edge.v == *p.vertex) total -= slope_left(ef, *edge.length);
    }
    return total;
  }
  const EdgeFunction& ef = f.edges()[p.edge];
  return slope_right(ef, p.offset) - slope_left(ef, p.offset);
}

void Divisor::add(const CurvePoint& p, long mult) {
  if (mult == 0) return;
  const long updated = (*this)[p] + mult;
  if (updated == 0) {
    weights_.erase(p);
  } else {
    weights_[p] = updated;
  }
}

long Divisor::operator[](const CurvePoint& p) const {
  const auto it = weights_.find(p);
  return it == weights_.end() ? 0 : it->second;
}

long Divisor::degree() const {
  long total = 0;
  for (const auto& [p, m] : weights_) total += m;
  return total;
}

bool Divisor::is_effective() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const auto& kv) { return kv.second >= 0; });
}

Divisor operator+(Divisor a, const Divisor& b) {
  for (const auto& [p, m] : b.weights_) a.add(p, m);
  return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
  for (const auto& [p, m] : b.weights_) a.add(p, -m);
  return a;
}

Divisor point_divisor(const CurvePoint& p, long mult) {
  Divisor d;
  d.add(p, mult);
  return d;
}

Divisor principal_divisor(const MetricGraph& g, const RationalFunction& f) {
  if (f.is_bottom()) throw Error(ErrorCode::BottomFunction, "divisor of the -inf function");
  require_graph_function(g, f);
  Divisor d;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const CurvePoint p = CurvePoint::at_vertex(v);
    d.add(p, order(g, f, p));
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& bp = f.edges()[e].breakpoints;
    const auto& len = g.edge(e).length;
    for (const auto& [o, value] : bp) {
      if (o <= 0 || (len && o >= *len)) continue;
      const CurvePoint p = CurvePoint::on_edge(e, o);
      d.add(p, order(g, f, p));
    }
  }
  return d;
}

bool is_section(const MetricGraph& g, const RationalFunction& f, const Divisor& d) {
  if (f.is_bottom()) return true;
  return (principal_divisor(g, f) + d).is_effective();
}

RationalFunction combine(const MetricGraph& g, const std::vector<RationalFunction>& fs,
                         const std::vector<Scalar>& coeffs) {
  if (fs.size() != coeffs.size()) throw Error(ErrorCode::SizeMismatch, "one coefficient per function");
  RationalFunction out = RationalFunction::bottom();
  for (std::size_t j = 0; j < fs.size(); ++j) out = fn_max(g, out, fn_shift(coeffs[j], fs[j]));
  return out;
}

bool module_closure_check(const MetricGraph& g, const std::vector<RationalFunction>& sections,
                          const Divisor& d, const std::vector<std::vector<Scalar>>& coefficient_samples) {
  for (std::size_t j = 0; j < sections.size(); ++j) {
    if (!is_section(g, sections[j], d)) {
      throw Error(ErrorCode::NotASection, "function " + std::to_string(j + 1) + " is not a section of D");
    }
  }
  for (const auto& coeffs : coefficient_samples) {
    if (!is_section(g, combine(g, sections, coeffs), d)) return false;
  }
  return true;
}

std::vector<Vector> evaluation_vectors(const MetricGraph& g, const std::vector<RationalFunction>& fs,
                                       const std::vector<CurvePoint>& points,
                                       const std::vector<Rational>& offsets) {
  if (!offsets.empty() && offsets.size() != points.size()) {
    throw Error(ErrorCode::SizeMismatch, "one offset per evaluation point");
  }
  std::vector<Vector> out;
  for (const auto& f : fs) {
    Vector v = Vector::bottom(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      v[i] = evaluate(g, f, points[i]);
      if (!offsets.empty()) v[i] = mul(v[i], Scalar(offsets[i]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> box_generators(const Vector& v, const Scalar& eps) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vector g = v;
    g[i] = mul(v[i], eps);
    out.push_back(std::move(g));
  }
  return out;
}

Fe7Result fe7_construct(const MetricGraph& g, const std::vector<RationalFunction>& sections,
                        const std::vector<CurvePoint>& points, const Divisor& d) {
  const std::size_t m = sections.size();
  if (m == 0 || points.size() != m) {
    throw Error(ErrorCode::PreconditionFailed, "need one evaluation point per section");
  }
  Divisor e;
  for (std::size_t i = 0; i < m; ++i) {
    require_on_graph(g, points[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i] == points[j]) {
        throw Error(ErrorCode::PreconditionFailed, "point " + std::to_string(i + 1) + " repeats point " +
                                                       std::to_string(j + 1));
      }
    }
    e.add(points[i], 1);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (sections[i].is_bottom()) {
      throw Error(ErrorCode::PreconditionFailed, "section " + std::to_string(i + 1) + " is -inf");
    }
    if (!is_section(g, sections[i], d - e + point_divisor(points[i]))) {
      throw Error(ErrorCode::PreconditionFailed, "section " + std::to_string(i + 1) +
                                                     " is not a section of D - E + P_" + std::to_string(i + 1) +
                                                     " at point " + points[i].str());
    }
  }

  Fe7Result result;
  result.evaluation = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) result.evaluation(i, j) = evaluate(g, sections[j], points[i]);
  }
  result.certificate = ff4_solve(result.evaluation);
  const Vector& v = result.certificate.v;

  if (result.certificate.which == DichotomyCase::II) {
    SectionWitness w{v, combine(g, sections, v.coords()), {}};
    for (std::size_t i = 0; i < m; ++i) {
      const Scalar target = evaluate(g, w.section, points[i]);
      std::optional<std::size_t> hit;
      for (std::size_t j = 0; j < m && !hit; ++j) {
        if (j != i && mul(v[j], result.evaluation(i, j)) == target) hit = j;
      }
      if (!hit) {
        throw Error(ErrorCode::InternalVerificationFailed,
                    "value at point " + std::to_string(i + 1) + " not attained off the diagonal");
      }
      w.attaining_index.push_back(*hit);
    }
    if (!is_section(g, w.section, d - e)) {
      throw Error(ErrorCode::InternalVerificationFailed, "witness is not a section of D - E");
    }
    result.witness = std::move(w);
    return result;
  }

  BoxModule box;
  box.base = v;
  box.epsilon = *result.certificate.epsilon;
  box.generators = box_generators(v, box.epsilon);
  box.dimension = dimension(Submodule(m, box.generators));
  if (box.dimension != m) {
    throw Error(ErrorCode::InternalVerificationFailed, "box module has dimension " +
                                                           std::to_string(box.dimension));
  }
  const Matrix diag = delta(result.evaluation);
  for (const auto& gen : box.generators) {
    if (mat_apply(result.evaluation, gen) != mat_apply(diag, gen)) {
      throw Error(ErrorCode::InternalVerificationFailed, "A is not diagonal on " + gen.str());
    }
    RationalFunction image = combine(g, sections, gen.coords());
    if (!is_section(g, image, d)) {
      throw Error(ErrorCode::InternalVerificationFailed, "image of " + gen.str() + " is not a section of D");
    }
    box.image_sections.push_back(std::move(image));
  }
  result.box = std::move(box);
  return result;
}

}  // namespace tropmod
