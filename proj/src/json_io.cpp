#include "tropmod/json_io.hpp"

#include "tropmod/error.hpp"

namespace tropmod::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::size_t read_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar read_scalar(const json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
  bad("scalar must be a string like \"-1/2\" or \"-inf\"");
}

json write(const Scalar& s) { return s.str(); }

Rational read_rational(const json& j) {
  const Scalar s = read_scalar(j);
  if (s.is_neg_inf()) bad("expected a finite rational");
  return s.value();
}

json write(const Rational& q) { return format_rational(q); }

Vector read_vector(const json& j) {
  if (!j.is_array()) bad("vector must be an array of scalars");
  std::vector<Scalar> coords;
  for (const auto& c : j) coords.push_back(read_scalar(c));
  return Vector(std::move(coords));
}

json write(const Vector& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(write(c));
  return out;
}

json write(const std::vector<Vector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(write(v));
  return out;
}

Polynomial read_polynomial(const json& j, std::size_t nvars) {
  if (!j.is_array()) bad("polynomial must be a list of {exp, coeff} terms");
  if (nvars == 0 && !j.empty()) nvars = field(j.front(), "exp").size();
  Polynomial f(nvars);
  for (const auto& t : j) {
    const json& e = field(t, "exp");
    if (!e.is_array()) bad("exp must be an integer array");
    Exponent exp;
    for (const auto& x : e) {
      if (!x.is_number_integer()) bad("exponents must be integers");
      exp.push_back(static_cast<long>(x.get<long long>()));
    }
    f.accumulate(exp, read_scalar(field(t, "coeff")));
  }
  return f;
}

json write(const Polynomial& f) {
  json out = json::array();
  for (const auto& [exp, c] : f.terms()) out.push_back({{"exp", exp}, {"coeff", write(c)}});
  return out;
}

Submodule read_submodule(const json& j) {
  const std::size_t n = read_index(field(j, "ambient"), "ambient");
  const json& gens = field(j, "generators");
  if (!gens.is_array() || gens.empty()) bad("generators must be a non-empty array");
  std::vector<Vector> vs;
  for (const auto& g : gens) vs.push_back(read_vector(g));
  return Submodule(n, std::move(vs));
}

json write(const Submodule& m) { return {{"ambient", m.ambient()}, {"generators", write(m.generators())}}; }

Matrix read_matrix(const json& j) {
  const json& entries = field(j, "entries");
  if (!entries.is_array() || entries.empty()) bad("entries must be a non-empty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : entries) rows.push_back(read_vector(r).coords());
  Matrix a(rows);
  if (j.contains("n") && (read_index(j.at("n"), "n") != a.rows() || !a.is_square())) {
    bad("n does not match the entries");
  }
  return a;
}

json write(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(write(a.row(i)));
  json out = {{"entries", rows}};
  if (a.is_square()) out["n"] = a.rows();
  return out;
}

json write(const Bound& b) { return b ? write(*b) : json("+inf"); }

json write(const std::vector<std::vector<Bound>>& c) {
  json out = json::array();
  for (const auto& row : c) {
    json r = json::array();
    for (const auto& b : row) r.push_back(write(b));
    out.push_back(r);
  }
  return out;
}

json write(const LatticeCertificate& cert) {
  json out = {{"lattice_preserving", cert.lattice_preserving}};
  if (cert.lattice_preserving) out["minima"] = write(cert.minima);
  if (cert.failing_coordinate) out["failing_coordinate"] = *cert.failing_coordinate + 1;
  return out;
}

json write(const DichotomyCertificate& cert) {
  json out = {{"case", cert.which == DichotomyCase::I ? "I" : "II"}, {"v", write(cert.v)}};
  if (cert.epsilon) out["epsilon"] = write(*cert.epsilon);
  return out;
}

std::vector<ProjPoint> read_points(const json& j) {
  const std::size_t n = read_index(field(j, "dim"), "dim");
  const json& pts = field(j, "points");
  if (!pts.is_array() || pts.empty()) bad("points must be a non-empty array");
  std::vector<ProjPoint> out;
  for (const auto& p : pts) {
    Vector v = read_vector(p);
    if (v.size() != n + 1) {
      throw Error(ErrorCode::DimensionMismatch, "point " + v.str() + " is not in TP^" + std::to_string(n));
    }
    out.emplace_back(v);
  }
  return out;
}

MetricGraph read_graph(const json& j) {
  const json& verts = field(j, "vertices");
  std::size_t count = 0;
  std::vector<std::string> names;
  if (verts.is_number_integer()) {
    count = read_index(verts, "vertices");
  } else if (verts.is_array()) {
    count = verts.size();
    for (const auto& v : verts) names.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  } else {
    bad("vertices must be a count or a list of names");
  }
  auto vertex = [&](const json& x) -> std::size_t {
    if (x.is_string()) {
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (names[k] == x.get<std::string>()) return k;
      }
      bad("unknown vertex '" + x.get<std::string>() + "'");
    }
    return read_index(x, "edge end");
  };
  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    const json& ends = field(e, "ends");
    if (!ends.is_array() || ends.empty() || ends.size() > 2) bad("ends must list one or two vertices");
    Edge edge;
    edge.u = vertex(ends[0]);
    const bool ray = e.value("ray", false) || ends.size() == 1;
    if (!ray) {
      if (ends.size() != 2) bad("a bounded edge needs two ends");
      edge.v = vertex(ends[1]);
      edge.length = read_rational(field(e, "len"));
    }
    edges.push_back(edge);
  }
  return MetricGraph(count, std::move(edges));
}

RationalFunction read_function(const MetricGraph& g, const json& j) {
  if (j.is_object() && j.value("bottom", false)) return RationalFunction::bottom();
  std::vector<Rational> vertex_values;
  for (const auto& v : field(j, "vertex_values")) vertex_values.push_back(read_rational(v));
  std::vector<EdgeFunction> edges;
  for (const auto& e : field(j, "edges")) {
    EdgeFunction ef;
    for (const auto& bp : field(e, "breakpoints")) {
      if (!bp.is_array() || bp.size() != 2) bad("breakpoint must be [offset, value]");
      ef.breakpoints.emplace_back(read_rational(bp[0]), read_rational(bp[1]));
    }
    if (e.contains("tail_slope")) {
      if (!e.at("tail_slope").is_number_integer()) bad("tail_slope must be an integer");
      ef.tail_slope = static_cast<long>(e.at("tail_slope").get<long long>());
    }
    edges.push_back(std::move(ef));
  }
  return RationalFunction::from_edges(g, std::move(vertex_values), std::move(edges));
}

json write(const RationalFunction& f) {
  if (f.is_bottom()) return {{"bottom", true}};
  json vv = json::array();
  for (const auto& v : f.vertex_values()) vv.push_back(write(v));
  json edges = json::array();
  for (const auto& ef : f.edges()) {
    json bps = json::array();
    for (const auto& [o, v] : ef.breakpoints) bps.push_back({write(o), write(v)});
    edges.push_back({{"breakpoints", bps}, {"tail_slope", ef.tail_slope}});
  }
  return {{"vertex_values", vv}, {"edges", edges}};
}

CurvePoint read_point(const json& j) {
  if (j.is_object() && j.contains("vertex")) return CurvePoint::at_vertex(read_index(j.at("vertex"), "vertex"));
  return CurvePoint::on_edge(read_index(field(j, "edge"), "edge"), read_rational(field(j, "offset")));
}

json write(const CurvePoint& p) {
  if (p.vertex) return {{"vertex", *p.vertex}};
  return {{"edge", p.edge}, {"offset", write(p.offset)}};
}

Divisor read_divisor(const json& j) {
  if (!j.is_array()) bad("divisor must be a list of {point, mult}");
  Divisor d;
  for (const auto& t : j) {
    const json& m = field(t, "mult");
    if (!m.is_number_integer()) bad("mult must be an integer");
    d.add(read_point(field(t, "point")), static_cast<long>(m.get<long long>()));
  }
  return d;
}

json write(const Divisor& d) {
  json out = json::array();
  for (const auto& [p, m] : d.support()) out.push_back({{"point", write(p)}, {"mult", m}});
  return out;
}

PlanePoint read_plane_point(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("plane point must be [x, y]");
  return PlanePoint{read_rational(j[0]), read_rational(j[1])};
}

json write(const PlanePoint& p) { return {write(p.x), write(p.y)}; }

json write(const Skeleton& sk) {
  json verts = json::array();
  for (const auto& p : sk.vertices) verts.push_back(write(p));
  json edges = json::array();
  for (const auto& s : sk.bounded_edges) {
    edges.push_back({{"from", s.from}, {"to", s.to}, {"direction", {s.direction.first, s.direction.second}},
                     {"multiplicity", s.multiplicity}});
  }
  json rays = json::array();
  for (const auto& r : sk.rays) {
    rays.push_back({{"vertex", r.vertex}, {"direction", {r.direction.first, r.direction.second}},
                    {"multiplicity", r.multiplicity}});
  }
  json lines = json::array();
  for (const auto& l : sk.lines) {
    lines.push_back({{"point", write(l.point)}, {"direction", {l.direction.first, l.direction.second}},
                     {"multiplicity", l.multiplicity}});
  }
  return {{"vertices", verts}, {"bounded_edges", edges}, {"rays", rays}, {"lines", lines}};
}

}  // namespace tropmod::json
