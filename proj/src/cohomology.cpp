#include "mesacurve/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

Rational power(const Rational& base, long exponent) {
  Rational result = 1;
  Rational b = exponent >= 0 ? base : Rational(1 / base);
  for (long i = 0, n = exponent >= 0 ? exponent : -exponent; i < n; ++i) result *= b;
  return result;
}

std::string linear_factor(const Rational& q) {
  if (q == 0) return "x";
  if (q > 0) return "(x-" + to_string(q) + ")";
  return "(x+" + to_string(Rational(-q)) + ")";
}

std::string monomial(std::size_t k) {
  if (k == 0) return "1";
  if (k == 1) return "x";
  return "x^" + std::to_string(k);
}

std::string factor_power(const Rational& q, long n) {
  std::string f = linear_factor(q);
  if (n != 1) {
    if (f == "x") f = "(x)";
    f += "^" + std::to_string(n);
  }
  return f;
}

VertexId owner_in(const ExplicitCurve& curve, const VertexSet& W,
                  const SpecialPoint& p) {
  if (p.kind == SpecialPoint::Kind::EdgeEnd) {
    throw Error(ErrorCode::InvalidSubset,
                "point " + to_string(p) + " is a node branch, not a smooth point");
  }
  for (auto v : W) {
    auto c = curve.components.find(v);
    if (c != curve.components.end() && c->second.coords.count(p)) return v;
  }
  throw Error(ErrorCode::PointNotDeclared,
              "point " + to_string(p) + " is not declared on the subcurve");
}

Rational gluing_of(const ExplicitCurve& curve, const ExplicitBundle& bundle,
                   EdgeId e) {
  auto it = bundle.gluing.find(e);
  return it == bundle.gluing.end() ? curve.alpha_of(e) : it->second;
}

// O_W itself: functions glue by equality, whatever the curve's units say.
ExplicitBundle structure_sheaf(const DualGraph& g, const VertexSet& W) {
  ExplicitBundle b = trivial_bundle(W);
  for (auto e : internal_nodes(g, W)) b.gluing[e] = 1;
  return b;
}

// Coordinates on H^1(O_W): rows of a basis of the left kernel of the
// matching map of the structure sheaf.
Matrix h1_coordinates(const DualGraph& g, const ExplicitCurve& curve,
                      const VertexSet& W) {
  const auto trivial = structure_sheaf(g, W);
  const auto layout = section_layout(g, curve, trivial);
  return left_kernel(matching_matrix(g, curve, trivial, layout));
}

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

}  // namespace

long degree(const CoordinateDivisor& d) {
  long total = 0;
  for (const auto& [p, n] : d) total += n;
  return total;
}

SectionBasis::SectionBasis(CoordinateDivisor d) : divisor_(std::move(d)) {
  for (auto it = divisor_.begin(); it != divisor_.end();) {
    it = it->second == 0 ? divisor_.erase(it) : std::next(it);
  }
  const long deg = degree(divisor_);
  dimension_ = deg >= 0 ? static_cast<std::size_t>(deg + 1) : 0;
}

Rational SectionBasis::value(std::size_t k, const ProjectivePoint& p) const {
  if (k >= dimension_) {
    throw Error(ErrorCode::NotInSectionSpace,
                "basis index " + std::to_string(k) + " out of range");
  }
  if (p.at_infinity) {
    return k + 1 == dimension_ ? Rational(1) : Rational(0);
  }
  Rational v = power(p.x, static_cast<long>(k));
  for (const auto& [q, n] : divisor_) {
    if (q.at_infinity || q == p) continue;
    v *= power(Rational(p.x - q.x), -n);
  }
  return v;
}

std::vector<Rational> SectionBasis::values_at(const ProjectivePoint& p) const {
  std::vector<Rational> out;
  out.reserve(dimension_);
  for (std::size_t k = 0; k < dimension_; ++k) out.push_back(value(k, p));
  return out;
}

std::string SectionBasis::describe(std::size_t k) const {
  std::vector<std::string> num;
  std::vector<std::string> den;
  if (k > 0) num.push_back(monomial(k));
  for (const auto& [q, n] : divisor_) {
    if (q.at_infinity) continue;
    (n < 0 ? num : den).push_back(factor_power(q.x, n < 0 ? -n : n));
  }
  auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : "*") + s;
    return out;
  };
  const std::string top = num.empty() ? "1" : join(num);
  return den.empty() ? top : top + "/(" + join(den) + ")";
}

SectionBasis riemann_section_space(const CoordinateDivisor& d) {
  return SectionBasis(d);
}

ExplicitBundle trivial_bundle(const VertexSet& support) {
  ExplicitBundle b;
  b.support = support;
  return b;
}

CoordinateDivisor resolve(const ExplicitCurve& curve, VertexId v,
                          const PointDivisor& d) {
  CoordinateDivisor out;
  for (const auto& [p, n] : d) {
    if (n != 0) out[curve.coordinate(v, p)] += n;
  }
  return out;
}

std::vector<Rational> SectionLayout::evaluation_row(VertexId v,
                                                    const ProjectivePoint& p) const {
  std::vector<Rational> row(ambient);
  const auto& basis = bases.at(v);
  const std::size_t off = offset.at(v);
  for (std::size_t k = 0; k < basis.dimension(); ++k) row[off + k] = basis.value(k, p);
  return row;
}

SectionLayout section_layout(const DualGraph& g, const ExplicitCurve& curve,
                             const ExplicitBundle& bundle) {
  require_realized(g, curve, bundle.support);
  SectionLayout layout;
  for (auto v : bundle.support) {
    auto it = bundle.divisor.find(v);
    CoordinateDivisor d =
        it == bundle.divisor.end() ? CoordinateDivisor{} : resolve(curve, v, it->second);
    layout.bases.emplace(v, SectionBasis(std::move(d)));
    layout.offset[v] = layout.ambient;
    layout.ambient += layout.bases.at(v).dimension();
  }
  for (const auto& [v, d] : bundle.divisor) {
    if (!bundle.support.count(v) && !d.empty()) {
      throw Error(ErrorCode::InvalidSubset, "divisor given on vertex " +
                                                std::to_string(v) +
                                                " outside the support");
    }
  }
  return layout;
}

std::vector<EdgeId> internal_nodes(const DualGraph& g, const VertexSet& support) {
  return g.induced_edges(support);
}

Matrix matching_matrix(const DualGraph& g, const ExplicitCurve& curve,
                       const ExplicitBundle& bundle, const SectionLayout& layout) {
  Matrix m(0, layout.ambient);
  for (auto eid : internal_nodes(g, bundle.support)) {
    const auto& e = g.edge(eid);
    const Rational alpha = gluing_of(curve, bundle, eid);
    auto lo = layout.evaluation_row(
        e.v, curve.coordinate(e.v, SpecialPoint::edge_end(eid, 0)));
    const auto hi = layout.evaluation_row(
        e.w, curve.coordinate(e.w, SpecialPoint::edge_end(eid, 1)));
    for (std::size_t j = 0; j < lo.size(); ++j) lo[j] -= alpha * hi[j];
    m.append_row(lo);
  }
  return m;
}

SectionSpace global_sections(const DualGraph& g, const ExplicitCurve& curve,
                             const ExplicitBundle& bundle) {
  SectionSpace s;
  s.layout = section_layout(g, curve, bundle);
  s.basis = kernel(matching_matrix(g, curve, bundle, s.layout));
  return s;
}

CechDimensions cech_h(const DualGraph& g, const ExplicitCurve& curve,
                      const ExplicitBundle& bundle) {
  const auto layout = section_layout(g, curve, bundle);
  const auto phi = matching_matrix(g, curve, bundle, layout);
  const long nodes = static_cast<long>(phi.rows());
  const long r = static_cast<long>(rank(phi));

  CechDimensions out;
  out.h0 = static_cast<long>(layout.ambient) - r;
  long component_h1 = 0;
  out.chi = -nodes;
  for (const auto& [v, basis] : layout.bases) {
    const long d = degree(basis.divisor());
    out.chi += d + 1;
    component_h1 += std::max(0L, -d - 1);
  }
  out.h1 = out.h0 - out.chi;
  if (out.h1 != nodes - r + component_h1) {
    throw Error(ErrorCode::InvariantBreach,
                "Euler characteristic disagrees with the normalization sequence");
  }
  return out;
}

Matrix connecting_values(const DualGraph& g, const ExplicitCurve& curve,
                         const VertexSet& W,
                         const std::vector<SpecialPoint>& points) {
  ExplicitBundle bundle = structure_sheaf(g, W);
  std::vector<VertexId> owners;
  for (const auto& p : points) {
    const VertexId v = owner_in(curve, W, p);
    if (bundle.divisor[v].count(p)) {
      throw Error(ErrorCode::InvalidSubset, "point " + to_string(p) + " repeated");
    }
    bundle.divisor[v][p] = 1;
    owners.push_back(v);
  }
  const auto layout = section_layout(g, curve, bundle);
  Matrix ev(0, layout.ambient);
  for (std::size_t i = 0; i < points.size(); ++i) {
    ev.append_row(layout.evaluation_row(owners[i], curve.coordinate(owners[i], points[i])));
  }
  const Matrix phi = matching_matrix(g, curve, bundle, layout);
  const Matrix y = h1_coordinates(g, curve, W);

  Matrix out(y.rows(), points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<Rational> lift;
    if (!solve(ev, unit_vector(points.size(), i), lift)) {
      throw Error(ErrorCode::InvariantBreach,
                  "evaluation at distinct points of P^1 is not surjective");
    }
    const auto column = y.apply(phi.apply(lift));
    for (std::size_t r = 0; r < y.rows(); ++r) out(r, i) = column[r];
  }
  return out;
}

std::vector<Rational> connecting_value(const DualGraph& g,
                                       const ExplicitCurve& curve,
                                       const VertexSet& W,
                                       const SpecialPoint& point) {
  ExplicitBundle bundle = structure_sheaf(g, W);
  const VertexId v = owner_in(curve, W, point);
  bundle.divisor[v][point] = 1;
  const auto layout = section_layout(g, curve, bundle);
  Matrix ev(0, layout.ambient);
  ev.append_row(layout.evaluation_row(v, curve.coordinate(v, point)));
  std::vector<Rational> lift;
  if (!solve(ev, {Rational(1)}, lift)) {
    throw Error(ErrorCode::InvariantBreach, "cannot lift a point value");
  }
  const Matrix y = h1_coordinates(g, curve, W);
  return y.apply(matching_matrix(g, curve, bundle, layout).apply(lift));
}

ExplicitBundle mesa_bundle(const DualGraph& g, const ExplicitCurve& curve,
                           const Mesa& m) {
  require_realized(g, curve, m.support);
  const auto top = trivial_bundle(m.top);
  const auto top_h = cech_h(g, curve, top);
  const long pieces = static_cast<long>(g.components(m.top).size());
  if (top_h.h0 != pieces) {
    throw Error(ErrorCode::NonCanonicalTopGluing,
                "gluing units on the top have nontrivial holonomy (h0 of the "
                "trivial bundle on the top is " +
                    std::to_string(top_h.h0) + ", expected " +
                    std::to_string(pieces) + ")");
  }
  ExplicitBundle b;
  b.support = m.support;
  for (const auto& shape : mesa_restriction_shapes(g, m)) {
    b.divisor[shape.component] = shape.divisor;
  }
  return b;
}

BoundaryValues boundary_value_space(const DualGraph& g, const ExplicitCurve& curve,
                                    const Mesa& m) {
  const auto bundle = mesa_bundle(g, curve, m);
  BoundaryValues out;
  out.cohomology = cech_h(g, curve, bundle);
  if (out.cohomology.h1 != 0) {
    throw Error(ErrorCode::NotAcyclic,
                "h1(O_E(-lambda)) = " + std::to_string(out.cohomology.h1) +
                    " on support; the mesa is not acyclic");
  }
  out.sections = global_sections(g, curve, bundle);
  out.boundary = g.boundary_edges(m.support);
  std::sort(out.boundary.begin(), out.boundary.end());

  const std::size_t h0 = out.sections.dimension();
  out.evaluation = Matrix(out.boundary.size(), h0);
  for (std::size_t i = 0; i < out.boundary.size(); ++i) {
    const auto& e = g.edge(out.boundary[i]);
    const VertexId u = m.support.count(e.v) ? e.v : e.w;
    out.inside.push_back(u);
    const auto row =
        out.sections.layout.evaluation_row(u, curve.coordinate(u, end_at(e, u)));
    const Rational alpha = curve.alpha_of(e.id);
    const Rational transport = u == e.v ? Rational(1 / alpha) : alpha;
    for (std::size_t j = 0; j < h0; ++j) {
      Rational value = 0;
      for (std::size_t c = 0; c < row.size(); ++c) {
        value += row[c] * out.sections.basis(j, c);
      }
      out.evaluation(i, j) = value * transport;
    }
  }
  out.subspace = column_space(out.evaluation);
  out.functionals = left_kernel(out.evaluation);
  const std::size_t r = out.subspace.rows();
  out.codim = out.boundary.size() - r;
  out.kernel_dimension = h0 - r;

  const long g_e = genus(g, m.support);
  if (static_cast<long>(out.codim) != g_e) {
    throw Error(ErrorCode::InvariantBreach,
                "codim V = " + std::to_string(out.codim) + " but genus(E) = " +
                    std::to_string(g_e));
  }
  if (out.kernel_dimension != 1) {
    throw Error(ErrorCode::InvariantBreach,
                "sections with zero boundary values form a space of dimension " +
                    std::to_string(out.kernel_dimension) + ", expected 1");
  }
  return out;
}

std::vector<Rational> gorenstein_constants(const BoundaryValues& bv) {
  if (bv.functionals.rows() != 1) return {};
  return bv.functionals.row(0);
}

}  // namespace mesacurve
