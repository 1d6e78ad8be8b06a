#include "mesacurve/pl_mesa.hpp"

#include <sstream>

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

std::string set_to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

// Top and radius of one nonzero component, or a reason why there is none.
struct TopResult {
  std::optional<MesaCandidate> candidate;
  std::string failure;
};

TopResult top_of_component(const DualGraph& g, const PLFunction& pl,
                           const VertexSet& comp) {
  std::optional<GroupElement> best;
  for (auto v : comp) {
    GroupElement val = pl.value(v, g.rank());
    if (!val.is_nonnegative()) {
      return {std::nullopt, "negative value at vertex " + std::to_string(v)};
    }
    if (!best || leq(*best, val)) best = val;
  }
  for (auto v : comp) {
    if (!leq(pl.value(v, g.rank()), *best)) {
      return {std::nullopt,
              "values on support " + set_to_string(comp) +
                  " have no unique maximum under the monoid order"};
    }
  }
  MesaCandidate c;
  c.support = comp;
  for (auto v : comp) {
    if (pl.value(v, g.rank()) == *best) c.top.insert(v);
  }
  c.radius = *best->to_monoid();
  return {c, {}};
}

std::vector<VertexSet> nonzero_components(const DualGraph& g,
                                          const PLFunction& pl) {
  VertexSet nonzero;
  for (const auto& v : g.vertices()) {
    if (!pl.value(v.id, g.rank()).is_zero()) nonzero.insert(v.id);
  }
  if (nonzero.empty()) return {};
  return g.components(nonzero);
}

}  // namespace

GroupElement PLFunction::value(VertexId v, std::size_t rank) const {
  auto it = vertex_values.find(v);
  if (it == vertex_values.end()) return GroupElement::zero(rank);
  return it->second;
}

Integer PLFunction::slope(MarkingId h) const {
  auto it = marking_slopes.find(h);
  return it == marking_slopes.end() ? Integer(0) : it->second;
}

PLFunction PLFunction::negated() const {
  PLFunction out;
  for (const auto& [v, x] : vertex_values) out.vertex_values[v] = -x;
  for (const auto& [h, n] : marking_slopes) out.marking_slopes[h] = -n;
  return out;
}

PLFunction PLFunction::plus(const PLFunction& other, std::size_t rank) const {
  PLFunction out = *this;
  for (const auto& [v, x] : other.vertex_values) {
    out.vertex_values[v] = value(v, rank) + x;
  }
  for (const auto& [h, n] : other.marking_slopes) {
    out.marking_slopes[h] = slope(h) + n;
  }
  return out.normalized();
}

PLFunction PLFunction::normalized() const {
  PLFunction out;
  for (const auto& [v, x] : vertex_values) {
    if (!x.is_zero()) out.vertex_values[v] = x;
  }
  for (const auto& [h, n] : marking_slopes) {
    if (n != 0) out.marking_slopes[h] = n;
  }
  return out;
}

PLReport validate_pl(const DualGraph& g, const PLFunction& pl) {
  for (const auto& [v, x] : pl.vertex_values) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::IntegrityError,
                  "PL value given for unknown vertex " + std::to_string(v));
    }
    if (x.rank() != g.rank()) {
      throw Error(ErrorCode::RankMismatch,
                  "PL value at vertex " + std::to_string(v) + " has rank " +
                      std::to_string(x.rank()));
    }
  }
  for (const auto& [h, n] : pl.marking_slopes) {
    if (!g.has_marking(h)) {
      throw Error(ErrorCode::IntegrityError,
                  "slope given for unknown marking " + std::to_string(h));
    }
  }
  PLReport report;
  for (const auto& e : g.edges()) {
    GroupElement d = pl.value(e.w, g.rank()) - pl.value(e.v, g.rank());
    if (integer_multiple_of(d, e.delta)) continue;
    std::ostringstream why;
    why << "f_" << e.w << " - f_" << e.v << " = " << d
        << " is not an integer multiple of delta = " << e.delta;
    report.violations.push_back({e.id, why.str()});
  }
  return report;
}

const char* to_string(Acyclicity a) {
  switch (a) {
    case Acyclicity::Yes: return "yes";
    case Acyclicity::No: return "no";
    case Acyclicity::Indeterminate: return "indeterminate";
    case Acyclicity::NotEvaluated: return "not_evaluated";
  }
  return "?";
}

Mesa mesa_from(const DualGraph& g, const VertexSet& E, const VertexSet& F) {
  for (auto v : E) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::InvalidSubset, "unknown vertex " + std::to_string(v));
    }
  }
  if (E.size() == g.vertices().size()) {
    throw Error(ErrorCode::NoOutsideComponent,
                "support is the whole curve: no outside component, radius "
                "undefined");
  }
  if (F.empty()) {
    throw Error(ErrorCode::InvalidSubset, "empty top");
  }
  auto paths = paths_from_top(g, E, F);
  for (auto v : E) {
    if (!F.count(v) && g.vertex(v).genus != 0) {
      throw Error(ErrorCode::NotATree,
                  "vertex " + std::to_string(v) +
                      " outside the top has positive genus, so the top has "
                      "smaller genus than the support");
    }
  }

  for (auto eid : g.induced_edges(E)) {
    const auto& e = g.edge(eid);
    if (F.count(e.v) && F.count(e.w)) continue;
    if (e.delta.is_zero()) {
      throw Error(ErrorCode::MesaShape,
                  "edge " + std::to_string(eid) +
                      " between the top and the boundary has zero smoothing "
                      "parameter");
    }
  }

  Mesa m;
  m.support = E;
  m.top = F;
  for (auto v : E) m.distance[v] = path_length(g, paths[v]);

  // Condition (i): every path from F to an adjacent outside component has
  // the same length.
  std::optional<MonoidElement> radius;
  std::set<VertexId> leads_outside;
  for (auto eid : g.boundary_edges(E)) {
    const auto& e = g.edge(eid);
    const VertexId inside = E.count(e.v) ? e.v : e.w;
    MonoidElement len = m.distance[inside] + e.delta;
    if (radius && *radius != len) {
      throw Error(ErrorCode::UnequalBoundaryLengths,
                  "boundary paths have different lengths " + to_string(*radius) +
                      " and " + to_string(len) + " (edge " +
                      std::to_string(eid) + ")");
    }
    radius = len;
    for (auto u : paths[inside].vertices) leads_outside.insert(u);
  }
  // Condition (ii): every component of E - F lies on such a path.
  for (auto v : E) {
    if (!F.count(v) && !leads_outside.count(v)) {
      throw Error(ErrorCode::DeadEndComponent,
                  "vertex " + std::to_string(v) +
                      " of E - F lies on no path from the top to the outside");
    }
  }
  if (radius->is_zero()) {
    throw Error(ErrorCode::MesaShape, "mesa radius is zero");
  }
  m.radius = *radius;
  for (auto v : E) {
    GroupElement val = difference(m.radius, m.distance[v]);
    if (val.is_zero() || !val.is_nonnegative()) {
      throw Error(ErrorCode::MesaShape,
                  "mesa value at vertex " + std::to_string(v) +
                      " is not a nonzero element of the monoid");
    }
    m.pl.vertex_values[v] = val;
  }
  return m;
}

std::vector<MesaCandidate> support_top_radius(const DualGraph& g,
                                              const PLFunction& pl) {
  std::vector<MesaCandidate> out;
  for (const auto& comp : nonzero_components(g, pl)) {
    auto r = top_of_component(g, pl, comp);
    if (!r.candidate) throw Error(ErrorCode::NoUniqueMaximum, r.failure);
    out.push_back(std::move(*r.candidate));
  }
  return out;
}

MesaShapeError::MesaShapeError(std::vector<ShapeFailure> failures)
    : Error(ErrorCode::MesaShape,
            [&] {
              std::ostringstream msg;
              msg << "not a sum of mesas:";
              for (const auto& f : failures) {
                msg << " [support " << set_to_string(f.support) << ": "
                    << f.reason << "]";
              }
              return msg.str();
            }()),
      failures_(std::move(failures)) {}

MesaDecomposition decompose(const DualGraph& g, const PLFunction& pl) {
  auto report = validate_pl(g, pl);
  if (!report.ok()) {
    throw Error(ErrorCode::PLViolation, report.violations.front().reason);
  }
  std::vector<ShapeFailure> failures;
  for (const auto& [h, n] : pl.marking_slopes) {
    if (n != 0) {
      failures.push_back({{g.marking_owner(h)},
                          "marking " + std::to_string(h) +
                              " has nonzero slope"});
    }
  }
  MesaDecomposition out;
  for (const auto& comp : nonzero_components(g, pl)) {
    auto top = top_of_component(g, pl, comp);
    if (!top.candidate) {
      failures.push_back({comp, top.failure});
      continue;
    }
    try {
      Mesa m = mesa_from(g, top.candidate->support, top.candidate->top);
      for (auto v : comp) {
        if (m.pl.value(v, g.rank()) != pl.value(v, g.rank())) {
          std::ostringstream why;
          why << "value " << pl.value(v, g.rank()) << " at vertex " << v
              << " differs from the mesa value " << m.pl.value(v, g.rank())
              << " (slope across the support boundary must be 1)";
          throw Error(ErrorCode::MesaShape, why.str());
        }
      }
      out.mesas.push_back(std::move(m));
      out.acyclicity.push_back(Acyclicity::NotEvaluated);
    } catch (const Error& e) {
      if (e.category() == ErrorCategory::Internal) throw;
      failures.push_back({comp, e.what()});
    }
  }
  if (!failures.empty()) throw MesaShapeError(std::move(failures));
  return out;
}

bool is_small(const DualGraph& g, const Mesa& m) {
  return core(g, m.support) == m.top;
}

}  // namespace mesacurve
