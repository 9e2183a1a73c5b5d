#include "tropmod/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "schema_text.hpp"
#include "tropmod/error.hpp"
#include "tropmod/fixtures.hpp"
#include "tropmod/json_io.hpp"

namespace tropmod::cli {

namespace {

using nlohmann::json;
using tropmod::json::field;
using tropmod::json::write;
namespace tj = tropmod::json;

struct Command {
  const char* name;
  const char* help;
  std::function<json(const json&)> run;
};

json envelope_ok(json result) { return {{"ok", true}, {"result", std::move(result)}}; }

json envelope_error(std::string_view code, const std::string& message) {
  return {{"ok", false}, {"error", {{"code", code}, {"message", message}}}};
}

long read_long(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return static_cast<long>(j.get<long long>());
}

std::vector<CurvePoint> read_curve_points(const json& j) {
  std::vector<CurvePoint> pts;
  for (const auto& p : j) pts.push_back(tj::read_point(p));
  return pts;
}

json scalar_op(const json& in) {
  const std::string op = field(in, "op").get<std::string>();
  const Scalar a = tj::read_scalar(field(in, "a"));
  Scalar r;
  if (op == "add") {
    r = add(a, tj::read_scalar(field(in, "b")));
  } else if (op == "mul") {
    r = mul(a, tj::read_scalar(field(in, "b")));
  } else if (op == "div") {
    r = div(a, tj::read_scalar(field(in, "b")));
  } else if (op == "min") {
    r = min(a, tj::read_scalar(field(in, "b")));
  } else if (op == "root") {
    r = root(a, read_long(field(in, "m"), "m"));
  } else if (op == "power") {
    const long m = read_long(field(in, "m"), "m");
    if (m < 0) throw Error(ErrorCode::InvalidArgument, "power needs m >= 0");
    r = power(a, m);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown scalar op '" + op + "'");
  }
  return {{"value", write(r)}};
}

json vector_op(const json& in) {
  const std::string op = field(in, "op").get<std::string>();
  if (op == "eval") {
    const Polynomial f = tj::read_polynomial(field(in, "polynomial"));
    return {{"value", write(poly_eval(f, tj::read_vector(field(in, "v"))))}};
  }
  const Vector v = tj::read_vector(field(in, "v"));
  if (op == "psi") return {{"value", write(psi(v))}};
  const Vector w = tj::read_vector(field(in, "w"));
  if (op == "leq") return {{"value", leq(v, w)}};
  if (op == "join") return {{"value", write(join(v, w))}};
  if (op == "meet") return {{"value", write(meet(v, w))}};
  if (op == "pairing") return {{"value", write(pairing(v, w))}};
  throw Error(ErrorCode::InvalidArgument, "unknown vector op '" + op + "'");
}

json predicate_cmd(const json& in) {
  const Vector p = tj::read_vector(field(in, "functional"));
  const Polynomial q = tj::read_polynomial(field(in, "bound"), p.size());
  return {{"member", predicate_membership(p, q, read_long(field(in, "degree"), "degree"), tj::read_vector(field(in, "vector")))}};
}

json contains_cmd(const json& in) {
  const Submodule m = tj::read_submodule(in);
  return {{"member", contains(m, tj::read_vector(field(in, "vector")))}};
}

json member_cmd(const json& in) {
  if (in.is_object() && in.contains("points")) {
    const Polytope p = hull(tj::read_points(in));
    const Vector q = tj::read_vector(field(in, "point"));
    if (q.size() != p.dim() + 1) throw Error(ErrorCode::DimensionMismatch, "point has the wrong dimension");
    return {{"member", contains_point(p, ProjPoint(q))}};
  }
  return contains_cmd(in);
}

json project_cmd(const json& in) {
  const Submodule m = tj::read_submodule(in);
  const Vector v = tj::read_vector(field(in, "vector"));
  json coeffs = json::array();
  for (const auto& c : residuation_coeffs(m, v)) coeffs.push_back(write(c));
  return {{"projection", write(project(m, v))}, {"coefficients", coeffs}};
}

json basis_cmd(const json& in) {
  const auto gens = minimal_generators(tj::read_submodule(in));
  return {{"generators", write(gens)}, {"count", gens.size()}};
}

json latcheck_cmd(const json& in) {
  const Submodule m = tj::read_submodule(in);
  json out = write(is_lattice_preserving(m));
  if (out["lattice_preserving"].get<bool>()) {
    const SectionMap s = section_map(m);
    json section = json::array();
    for (auto k : s.section) section.push_back(k);
    out["section_map"] = {{"basis", write(s.basis)}, {"section", section}, {"c", write(s.c)}};
  }
  return out;
}

json straightcheck_cmd(const json& in) {
  const Submodule m = tj::read_submodule(in);
  std::vector<Triple> triples;
  for (const auto& t : field(in, "triples")) {
    triples.push_back(Triple{tj::read_vector(field(t, "v1")), tj::read_vector(field(t, "v2")), tj::read_vector(field(t, "w"))});
  }
  const auto rep = straightness_sample_check(m, triples);
  json out = {{"holds", rep.holds}};
  if (!rep.holds) {
    const Triple& t = *rep.counterexample;
    out["counterexample"] = {{"v1", write(t.v1)}, {"v2", write(t.v2)}, {"w", write(t.w)}};
    out["law"] = rep.law;
    out["lhs"] = write(rep.lhs);
    out["rhs"] = write(rep.rhs);
  }
  return out;
}

json leftinv_cmd(const json& in) {
  const Matrix a = tj::read_matrix(field(in, "matrix"));
  return {{"preimage", write(left_inverse(a, tj::read_vector(field(in, "vector"))))}};
}

json det_cmd(const json& in) {
  const Matrix a = tj::read_matrix(in);
  return {{"det", write(trop_det(a))},
          {"offdiagonal", write(offdiagonal_permutation_weight(a))},
          {"diagonal", write(diagonal_weight(a))}};
}

json pow_cmd(const json& in) {
  const long k = read_long(field(in, "k"), "k");
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "k must be non-negative");
  return {{"power", write(mat_power(tj::read_matrix(in), static_cast<std::size_t>(k)))}};
}

json ff3_cmd(const json& in) {
  const auto s = ff3_stabilize(tj::read_matrix(in));
  return {{"power", write(s.power)}, {"verified", s.verified}};
}

json ff4_cmd(const json& in) {
  const Matrix a = tj::read_matrix(in);
  const auto cert = ff4_solve(a);
  json out = write(cert);
  out["verified"] = verify_certificate(a, cert);
  return out;
}

json hull_cmd(const json& in) {
  const Polytope p = hull(tj::read_points(in));
  json pts = json::array();
  for (const auto& q : p.points()) pts.push_back(write(q.rep()));
  const auto gens = minimal_generators(p.module());
  return {{"points", pts}, {"generators", write(gens)}, {"dimension", gens.size()}};
}

json polytrope_cmd(const json& in) {
  json out = write(is_polytrope(hull(tj::read_points(in))));
  out["polytrope"] = out["lattice_preserving"];
  return out;
}

json vertices_cmd(const json& in) {
  json pts = json::array();
  for (const auto& q : polytrope_vertices(hull(tj::read_points(in)))) pts.push_back(write(q.rep()));
  return {{"vertices", pts}};
}

json ineqs_cmd(const json& in) { return {{"c", write(defining_inequalities(hull(tj::read_points(in))))}}; }

json ord_cmd(const json& in) {
  const MetricGraph g = tj::read_graph(field(in, "graph"));
  const RationalFunction f = tj::read_function(g, field(in, "function"));
  return {{"order", order(g, f, tj::read_point(field(in, "point")))}};
}

json divisor_cmd(const json& in) {
  const MetricGraph g = tj::read_graph(field(in, "graph"));
  const Divisor d = principal_divisor(g, tj::read_function(g, field(in, "function")));
  return {{"divisor", write(d)}, {"degree", d.degree()}};
}

json section_cmd(const json& in) {
  const MetricGraph g = tj::read_graph(field(in, "graph"));
  const RationalFunction f = tj::read_function(g, field(in, "function"));
  return {{"section", is_section(g, f, tj::read_divisor(field(in, "divisor")))}};
}

json fe7_cmd(const json& in) {
  const MetricGraph g = tj::read_graph(field(in, "graph"));
  std::vector<RationalFunction> fs;
  for (const auto& f : field(in, "sections")) fs.push_back(tj::read_function(g, f));
  const auto res = fe7_construct(g, fs, read_curve_points(field(in, "points")), tj::read_divisor(field(in, "divisor")));
  json out = {{"matrix", write(res.evaluation)}, {"certificate", write(res.certificate)}};
  if (res.witness) {
    out["witness"] = {{"coefficients", write(res.witness->coefficients)},
                      {"section", write(res.witness->section)},
                      {"attaining_index", res.witness->attaining_index}};
  }
  if (res.box) {
    out["box"] = {{"base", write(res.box->base)},
                  {"epsilon", write(res.box->epsilon)},
                  {"generators", write(res.box->generators)},
                  {"dimension", res.box->dimension}};
  }
  return out;
}

json oncurve_cmd(const json& in) {
  const Polynomial f = tj::read_polynomial(field(in, "polynomial"), 2);
  return {{"on_curve", on_curve(f, tj::read_plane_point(field(in, "point")))}};
}

json skeleton_cmd(const json& in) { return write(skeleton(tj::read_polynomial(field(in, "polynomial"), 2))); }

json betti_cmd(const json& in) { return {{"betti1", betti1(skeleton(tj::read_polynomial(field(in, "polynomial"), 2)))}}; }

json tropicalize_cmd(const json& in) {
  std::vector<ValuedTerm> terms;
  for (const auto& t : field(in, "terms")) {
    const json& e = field(t, "exp");
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "exp must be [i, j]");
    terms.push_back(ValuedTerm{{read_long(e[0], "exp"), read_long(e[1], "exp")}, tj::read_rational(field(t, "val"))});
  }
  return {{"polynomial", write(tropicalize(terms))}};
}

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"scalar", "semifield operation: op in add, mul, div, min, root, power", scalar_op},
      {"vector", "free-module operation: op in leq, join, meet, pairing, psi, eval", vector_op},
      {"predicate", "membership in { v : m <v,p> <= q(v) }", predicate_cmd},
      {"contains", "submodule membership", contains_cmd},
      {"member", "submodule or polytope membership", member_cmd},
      {"project", "greatest module element below a vector", project_cmd},
      {"basis", "minimal generating set", basis_cmd},
      {"dim", "number of extremal rays",
       [](const json& in) { return json{{"dimension", dimension(tj::read_submodule(in))}}; }},
      {"latcheck", "lattice-preserving test with section map", latcheck_cmd},
      {"straightcheck", "distributivity on sample triples", straightcheck_cmd},
      {"leftinv", "residuated left inverse of a matrix", leftinv_cmd},
      {"det", "tropical determinant", det_cmd},
      {"pow", "matrix power", pow_cmd},
      {"ff3", "power stabilisation under unit diagonal and zero determinant", ff3_cmd},
      {"ff4", "eigen-dichotomy certificate", ff4_cmd},
      {"hull", "tropical convex hull", hull_cmd},
      {"polytrope-check", "decide whether a polytope is a polytrope", polytrope_cmd},
      {"vertices", "vertices of a polytrope", vertices_cmd},
      {"ineqs", "defining inequalities of a polytrope", ineqs_cmd},
      {"ord", "order of a function at a point", ord_cmd},
      {"divisor", "principal divisor", divisor_cmd},
      {"section-check", "is the function a section of the divisor", section_cmd},
      {"fe7", "dichotomy for sections at marked points", fe7_cmd},
      {"oncurve", "corner-locus membership", oncurve_cmd},
      {"skeleton", "vertices, edges and rays of a plane curve", skeleton_cmd},
      {"betti", "first Betti number of a plane curve", betti_cmd},
      {"tropicalize", "polynomial from valued coefficients", tropicalize_cmd},
  };
  return table;
}

json fixtures_result(bool& all_passed) {
  json checks = json::array();
  std::size_t passed = 0;
  const auto corpus = fixtures::run_corpus();
  for (const auto& c : corpus) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    passed += c.passed ? 1 : 0;
  }
  all_passed = passed == corpus.size();
  return {{"checks", checks}, {"passed", passed}, {"total", corpus.size()}};
}

}  // namespace

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto& c : commands()) names.emplace_back(c.name);
  names.emplace_back("fixtures");
  return names;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out) {
  CLI::App app{"Exact max-plus module toolkit. Reads one JSON document, writes one JSON document."};
  app.name("tropmod");
  bool schema = false;
  bool pretty = false;
  app.add_flag("--schema", schema, "print the JSON schema of every command");
  app.add_flag("--pretty", pretty, "indent the output");
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string input_path;
  std::string inline_json;
  for (const auto& c : commands()) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("-i,--input", input_path, "JSON input file (default: stdin)");
    sub->add_option("-j,--json", inline_json, "inline JSON input");
  }
  app.add_subcommand("fixtures", "run the worked-example corpus");

  auto emit = [&](const json& doc) { out << (pretty ? doc.dump(2) : doc.dump()) << '\n'; };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(envelope_error("UsageError", e.what()));
    return 2;
  }

  if (schema) {
    out << kSchemaText;
    return 0;
  }
  const auto subs = app.get_subcommands();
  if (subs.empty()) {
    emit(envelope_error("UsageError", "a subcommand is required; run with --help"));
    return 2;
  }
  const std::string name = subs.front()->get_name();

  try {
    if (name == "fixtures") {
      bool all = false;
      json result = fixtures_result(all);
      json doc = envelope_ok(result);
      if (!all) {
        doc = envelope_error(to_string(ErrorCode::InternalVerificationFailed), "some fixture checks failed");
        doc["result"] = result;
      }
      emit(doc);
      return all ? 0 : 1;
    }
    json input;
    if (!inline_json.empty()) {
      input = json::parse(inline_json);
    } else if (!input_path.empty()) {
      std::ifstream file(input_path);
      if (!file) {
        emit(envelope_error("UsageError", "cannot open " + input_path));
        return 2;
      }
      input = json::parse(file);
    } else {
      input = json::parse(in);
    }
    for (const auto& c : commands()) {
      if (name == c.name) {
        emit(envelope_ok(c.run(input)));
        return 0;
      }
    }
    emit(envelope_error("UsageError", "unknown command " + name));
    return 2;
  } catch (const Error& e) {
    emit(envelope_error(to_string(e.code()), e.what()));
  } catch (const nlohmann::json::exception& e) {
    emit(envelope_error(to_string(ErrorCode::ParseError), e.what()));
  } catch (const std::exception& e) {
    emit(envelope_error(to_string(ErrorCode::InvalidArgument), e.what()));
  }
  return 1;
}

}  // namespace tropmod::cli
