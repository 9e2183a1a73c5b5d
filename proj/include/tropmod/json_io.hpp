#pragma once

// JSON encodings shared by the CLI and fixtures. Scalars are strings
// ("-inf", "p/q", "p"); every reader throws ParseError on malformed input.

#include <json.hpp>

#include "tropmod/curve.hpp"
#include "tropmod/matrix.hpp"
#include "tropmod/planecurve.hpp"
#include "tropmod/polytope.hpp"
#include "tropmod/submodule.hpp"
#include "tropmod/vector.hpp"

namespace tropmod::json {

using nlohmann::json;

/// Member lookup that reports the missing key as a ParseError.
const json& field(const json& j, const char* key);

Scalar read_scalar(const json& j);
json write(const Scalar& s);
Rational read_rational(const json& j);
json write(const Rational& q);

Vector read_vector(const json& j);
json write(const Vector& v);
json write(const std::vector<Vector>& vs);

/// [{"exp": [ints], "coeff": "p/q"}]; nvars inferred from the first term
/// unless given.
Polynomial read_polynomial(const json& j, std::size_t nvars = 0);
json write(const Polynomial& f);

/// {"ambient": n, "generators": [[...]]}
Submodule read_submodule(const json& j);
json write(const Submodule& m);

/// {"n": n, "entries": [[...]]}; "n" is optional and checked when present.
Matrix read_matrix(const json& j);
json write(const Matrix& a);

json write(const Bound& b);
json write(const std::vector<std::vector<Bound>>& c);
json write(const LatticeCertificate& cert);
json write(const DichotomyCertificate& cert);

/// {"dim": n, "points": [[...]]}
std::vector<ProjPoint> read_points(const json& j);

/// {"vertices": [...], "edges": [{"ends": [u, v], "len": "p/q"} | {"ends": [u], "ray": true}]}
MetricGraph read_graph(const json& j);
/// {"bottom": true} or {"vertex_values": [...], "edges": [{"breakpoints": [[o, v], ...], "tail_slope": k}]}
RationalFunction read_function(const MetricGraph& g, const json& j);
json write(const RationalFunction& f);
/// {"vertex": i} or {"edge": e, "offset": "p/q"}
CurvePoint read_point(const json& j);
json write(const CurvePoint& p);
/// [{"point": P, "mult": k}]
Divisor read_divisor(const json& j);
json write(const Divisor& d);

PlanePoint read_plane_point(const json& j);
json write(const PlanePoint& p);
json write(const Skeleton& sk);

}  // namespace tropmod::json
