#include "mesacurve/line_bundle.hpp"

#include <limits>

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

long to_long(const Integer& x, const char* what) {
  if (x > std::numeric_limits<long>::max() ||
      x < std::numeric_limits<long>::min()) {
    throw Error(ErrorCode::SchemaError, std::string(what) + " out of range");
  }
  return x.convert_to<long>();
}

}  // namespace

std::string to_string(const SpecialPoint& p) {
  switch (p.kind) {
    case SpecialPoint::Kind::EdgeEnd:
      return "e" + std::to_string(p.id) + (p.end ? "'" : "");
    case SpecialPoint::Kind::Marking:
      return "h" + std::to_string(p.id);
    case SpecialPoint::Kind::Auxiliary:
      return "a" + std::to_string(p.id);
  }
  return "?";
}

SpecialPoint end_at(const Edge& e, VertexId v) {
  if (!e.touches(v)) {
    throw Error(ErrorCode::InvalidSubset, "edge " + std::to_string(e.id) +
                                              " does not touch vertex " +
                                              std::to_string(v));
  }
  return SpecialPoint::edge_end(e.id, e.v == v ? 0 : 1);
}

long degree(const PointDivisor& d) {
  long total = 0;
  for (const auto& [p, n] : d) total += n;
  return total;
}

long outgoing_slope(const DualGraph& g, const PLFunction& pl, VertexId v,
                    const SpecialPoint& p) {
  switch (p.kind) {
    case SpecialPoint::Kind::Marking:
      if (g.marking_owner(p.id) != v) {
        throw Error(ErrorCode::InvalidSubset,
                    "marking " + std::to_string(p.id) + " is not on vertex " +
                        std::to_string(v));
      }
      return to_long(pl.slope(p.id), "marking slope");
    case SpecialPoint::Kind::Auxiliary:
      return 0;
    case SpecialPoint::Kind::EdgeEnd:
      break;
  }
  const auto& e = g.edge(p.id);
  if (!e.touches(v)) {
    throw Error(ErrorCode::InvalidSubset, "edge " + std::to_string(e.id) +
                                              " does not touch vertex " +
                                              std::to_string(v));
  }
  if (e.is_loop()) return 0;
  const VertexId w = e.other(v);
  auto m = integer_multiple_of(pl.value(w, g.rank()) - pl.value(v, g.rank()),
                               e.delta);
  if (!m) {
    throw Error(ErrorCode::PLViolation,
                "PL condition fails on edge " + std::to_string(e.id));
  }
  return to_long(*m, "edge slope");
}

PointDivisor restriction_divisor(const DualGraph& g, const PLFunction& pl,
                                 VertexId v) {
  PointDivisor d;
  for (auto eid : g.incident_edges(v)) {
    const auto& e = g.edge(eid);
    if (e.is_loop()) continue;
    const auto p = end_at(e, v);
    const long s = outgoing_slope(g, pl, v, p);
    if (s != 0) d[p] = s;
  }
  for (auto h : g.vertex(v).markings) {
    const long s = to_long(pl.slope(h), "marking slope");
    if (s != 0) d[SpecialPoint::marking(h)] = s;
  }
  return d;
}

Multidegree multidegree(const DualGraph& g, const PLFunction& pl) {
  Multidegree md;
  for (const auto& v : g.vertices()) {
    const long d = degree(restriction_divisor(g, pl, v.id));
    md.degree[v.id] = d;
    md.total += d;
    for (auto eid : g.incident_edges(v.id)) {
      if (g.edge(eid).is_loop()) md.loop_incident.insert(v.id);
    }
  }
  return md;
}

std::vector<RestrictionShape> mesa_restriction_shapes(const DualGraph& g,
                                                      const Mesa& m) {
  const auto paths = paths_from_top(g, m.support, m.top);
  const PLFunction minus = m.pl.negated();
  std::vector<RestrictionShape> shapes;
  for (auto v : m.support) {
    RestrictionShape s;
    s.component = v;
    s.role = m.top.count(v) ? RestrictionShape::Role::Top
                            : RestrictionShape::Role::Tail;
    const auto& path = paths.at(v);
    const EdgeId towards = path.edges.empty() ? -1 : path.edges.back();
    for (auto eid : g.incident_edges(v)) {
      const auto& e = g.edge(eid);
      if (e.is_loop()) continue;
      const VertexId w = e.other(v);
      if (m.top.count(v) && m.top.count(w)) continue;
      s.divisor[end_at(e, v)] = (eid == towards) ? -1 : 1;
    }
    if (s.divisor != restriction_divisor(g, minus, v)) {
      throw Error(ErrorCode::InvariantBreach,
                  "restriction shape at vertex " + std::to_string(v) +
                      " disagrees with the slopes of -lambda");
    }
    shapes.push_back(std::move(s));
  }
  return shapes;
}

}  // namespace mesacurve
