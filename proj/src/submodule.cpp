#include "tropmod/submodule.hpp"

#include <algorithm>

#include "tropmod/error.hpp"

namespace tropmod {

Submodule::Submodule(std::size_t ambient, std::vector<Vector> generators)
    : ambient_(ambient), generators_(std::move(generators)) {
  if (ambient_ == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be >= 1");
  for (const auto& g : generators_) {
    if (g.size() != ambient_) {
      throw Error(ErrorCode::LengthMismatch, "generator " + g.str() + " not in T^" +
                                                 std::to_string(ambient_));
    }
  }
}

std::vector<Vector> Submodule::nonzero_generators() const {
  std::vector<Vector> out;
  for (const auto& g : generators_) {
    if (!g.is_bottom()) out.push_back(g);
  }
  return out;
}

bool Submodule::is_zero() const { return nonzero_generators().empty(); }

Scalar residual(const Vector& w, const Vector& v) {
  require_same_length(w, v);
  std::optional<Rational> best;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_neg_inf()) continue;
    if (v[i].is_neg_inf()) return Scalar::neg_inf();
    Rational d = v[i].value() - w[i].value();
    if (!best || d < *best) best = std::move(d);
  }
  return best ? Scalar(*best) : Scalar::neg_inf();
}

std::vector<Scalar> residuation_coeffs(const Submodule& m, const Vector& v) {
  if (v.size() != m.ambient()) throw Error(ErrorCode::LengthMismatch, "query not in ambient space");
  std::vector<Scalar> out;
  out.reserve(m.generators().size());
  for (const auto& g : m.generators()) out.push_back(residual(g, v));
  return out;
}

Vector project(const Submodule& m, const Vector& v) {
  const auto lambda = residuation_coeffs(m, v);
  Vector out = Vector::bottom(m.ambient());
  for (std::size_t h = 0; h < lambda.size(); ++h) {
    if (lambda[h].is_finite()) out = join(out, scale(lambda[h], m.generators()[h]));
  }
  return out;
}

bool contains(const Submodule& m, const Vector& v) { return project(m, v) == v; }

bool same_span(const Submodule& a, const Submodule& b) {
  if (a.ambient() != b.ambient()) return false;
  for (const auto& g : a.generators()) {
    if (!contains(b, g)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!contains(a, g)) return false;
  }
  return true;
}

Vector normalize_ray(const Vector& v) {
  Scalar top;
  for (const auto& c : v) top = add(top, c);
  if (top.is_neg_inf()) return v;
  return scale(Scalar(Rational(-top.value())), v);
}

bool same_ray(const Vector& v, const Vector& w) { return normalize_ray(v) == normalize_ray(w); }

std::vector<Vector> minimal_generators(const Submodule& m) {
  std::vector<Vector> pool;
  for (const auto& g : m.nonzero_generators()) {
    Vector n = normalize_ray(g);
    if (std::find(pool.begin(), pool.end(), n) == pool.end()) pool.push_back(std::move(n));
  }
  for (std::size_t i = 0; i < pool.size();) {
    std::vector<Vector> others;
    others.reserve(pool.size() - 1);
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (j != i) others.push_back(pool[j]);
    }
    if (!others.empty() && contains(Submodule(m.ambient(), others), pool[i])) {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::size_t dimension(const Submodule& m) { return minimal_generators(m).size(); }

Vector inf_in_module(const Submodule& m, const Vector& v, const Vector& w) {
  if (!contains(m, v)) throw Error(ErrorCode::NotInModule, v.str() + " is not in the module");
  if (!contains(m, w)) throw Error(ErrorCode::NotInModule, w.str() + " is not in the module");
  return project(m, meet(v, w));
}

LatticeCertificate coordinate_minima(const Submodule& m) {
  LatticeCertificate cert;
  const auto gens = m.nonzero_generators();
  for (std::size_t i = 0; i < m.ambient(); ++i) {
    std::optional<Vector> lowest;
    for (const auto& g : gens) {
      if (g[i].is_neg_inf()) continue;
      Vector rescaled = scale(Scalar(Rational(-g[i].value())), g);
      lowest = lowest ? meet(*lowest, rescaled) : rescaled;
    }
    if (!lowest || !contains(m, *lowest)) {
      cert.failing_coordinate = i;
      cert.minima.clear();
      return cert;
    }
    cert.minima.push_back(std::move(*lowest));
  }
  cert.lattice_preserving = true;
  return cert;
}

LatticeCertificate is_lattice_preserving(const Submodule& m) {
  const auto gens = m.nonzero_generators();
  if (gens.empty()) throw Error(ErrorCode::NotInteriorGenerators, "zero module has no generators");
  for (const auto& g : gens) {
    if (!g.is_interior()) {
      throw Error(ErrorCode::NotInteriorGenerators, "generator " + g.str() + " has a -inf coordinate");
    }
  }
  return coordinate_minima(m);
}

SectionMap section_map(const Submodule& m) {
  const LatticeCertificate cert = coordinate_minima(m);
  if (!cert.lattice_preserving) {
    throw Error(ErrorCode::NotLatticePreserving,
                "no minimum in coordinate section " + std::to_string(*cert.failing_coordinate + 1));
  }
  SectionMap out;
  out.basis = minimal_generators(m);
  const std::size_t n = m.ambient();
  out.c.assign(n, std::vector<Bound>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ray = normalize_ray(cert.minima[i]);
    const auto it = std::find(out.basis.begin(), out.basis.end(), ray);
    if (it == out.basis.end()) {
      throw Error(ErrorCode::InternalVerificationFailed,
                  "coordinate minimum " + cert.minima[i].str() + " is not a basis ray");
    }
    out.section.push_back(static_cast<std::size_t>(it - out.basis.begin()));
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& x = cert.minima[i][j];
      if (x.is_finite()) out.c[i][j] = Rational(-x.value());
    }
  }
  return out;
}

bool satisfies_inequalities(const std::vector<std::vector<Bound>>& c, const Vector& x) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (x[i].is_neg_inf()) continue;
    for (std::size_t j = 0; j < c[i].size(); ++j) {
      if (!c[i][j]) continue;
      if (x[j].is_neg_inf() || x[j].value() < x[i].value() - *c[i][j]) return false;
    }
  }
  return true;
}

Scalar dual_eval(const Vector& e, const Vector& v) {
  if (e.is_bottom()) throw Error(ErrorCode::BottomBase, "dual element of bottom");
  return residual(e, v);
}

bool right_inverse_check(const Submodule& m, const std::vector<Vector>& basis,
                         const std::vector<Vector>& samples) {
  for (const auto& v : samples) {
    if (!contains(m, v)) throw Error(ErrorCode::NotInModule, v.str() + " is not in the module");
    Vector rebuilt = Vector::bottom(m.ambient());
    for (const auto& e : basis) rebuilt = join(rebuilt, scale(dual_eval(e, v), e));
    if (rebuilt != v) return false;
  }
  return true;
}

Vector left_inverse(const Matrix& a, const Vector& w) {
  if (w.size() != a.rows()) throw Error(ErrorCode::SizeMismatch, "target has wrong length");
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < a.cols(); ++j) columns.push_back(a.column(j));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].is_bottom()) {
      throw Error(ErrorCode::NotInjective, "column " + std::to_string(j + 1) + " is bottom");
    }
    std::vector<Vector> others = columns;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(j));
    if (!others.empty() && contains(Submodule(a.rows(), others), columns[j])) {
      throw Error(ErrorCode::NotInjective,
                  "column " + std::to_string(j + 1) + " lies in the span of the others");
    }
  }
  Vector out = Vector::bottom(a.cols());
  for (std::size_t j = 0; j < columns.size(); ++j) out[j] = residual(columns[j], w);
  return out;
}

StraightnessReport straightness_sample_check(const InfimumOracle& module,
                                             const std::vector<Triple>& triples) {
  StraightnessReport report;
  for (const auto& t : triples) {
    for (const Vector* x : {&t.v1, &t.v2, &t.w}) {
      if (!module.contains(*x)) throw Error(ErrorCode::NotInModule, x->str() + " is not in the module");
    }
    Vector lhs = module.inf(join(t.v1, t.v2), t.w);
    Vector rhs = join(module.inf(t.v1, t.w), module.inf(t.v2, t.w));
    std::string law = "join-meet";
    if (lhs == rhs) {
      lhs = join(module.inf(t.v1, t.v2), t.w);
      rhs = module.inf(join(t.v1, t.w), join(t.v2, t.w));
      law = "meet-join";
    }
    if (lhs != rhs) {
      report.holds = false;
      report.counterexample = t;
      report.law = std::move(law);
      report.lhs = std::move(lhs);
      report.rhs = std::move(rhs);
      return report;
    }
  }
  return report;
}

StraightnessReport straightness_sample_check(const Submodule& m, const std::vector<Triple>& triples) {
  const InfimumOracle oracle{
      [&m](const Vector& v) { return contains(m, v); },
      [&m](const Vector& v, const Vector& w) { return project(m, meet(v, w)); }};
  return straightness_sample_check(oracle, triples);
}

}  // namespace tropmod
