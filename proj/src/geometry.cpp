#include "mesacurve/geometry.hpp"

#include <algorithm>
#include <set>

#include "mesacurve/errors.hpp"

namespace mesacurve {

std::strong_ordering ProjectivePoint::operator<=>(const ProjectivePoint& other) const {
  if (at_infinity != other.at_infinity) {
    return at_infinity ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  if (at_infinity) return std::strong_ordering::equal;
  if (x < other.x) return std::strong_ordering::less;
  if (x > other.x) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const ProjectivePoint& p) {
  return p.at_infinity ? "inf" : to_string(p.x);
}

ProjectivePoint parse_point(const std::string& text) {
  if (text == "inf" || text == "infinity") return ProjectivePoint::infinity();
  return ProjectivePoint::affine(parse_rational(text));
}

Rational ExplicitCurve::alpha_of(EdgeId e) const {
  auto it = alpha.find(e);
  return it == alpha.end() ? Rational(1) : it->second;
}

const ProjectivePoint& ExplicitCurve::coordinate(VertexId v,
                                                 const SpecialPoint& p) const {
  auto c = components.find(v);
  if (c == components.end()) {
    throw Error(ErrorCode::PointNotDeclared,
                "vertex " + std::to_string(v) + " has no explicit model");
  }
  auto it = c->second.coords.find(p);
  if (it == c->second.coords.end()) {
    throw Error(ErrorCode::PointNotDeclared, "point " + to_string(p) +
                                                 " has no coordinate on vertex " +
                                                 std::to_string(v));
  }
  return it->second;
}

std::vector<SpecialPoint> points_on(const DualGraph& g, VertexId v) {
  std::vector<SpecialPoint> out;
  for (auto eid : g.incident_edges(v)) {
    const auto& e = g.edge(eid);
    if (e.is_loop()) {
      out.push_back(SpecialPoint::edge_end(eid, 0));
      out.push_back(SpecialPoint::edge_end(eid, 1));
    } else {
      out.push_back(end_at(e, v));
    }
  }
  for (auto h : g.vertex(v).markings) out.push_back(SpecialPoint::marking(h));
  return out;
}

void validate_geometry(const DualGraph& g, const ExplicitCurve& curve) {
  std::map<long, VertexId> auxiliary_owner;
  for (const auto& [v, model] : curve.components) {
    const std::string where = "vertex " + std::to_string(v);
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::GeometryMismatch, "geometry given for unknown " + where);
    }
    if (g.vertex(v).genus != 0) {
      throw Error(ErrorCode::NonRationalComponent,
                  where + " has genus " + std::to_string(g.vertex(v).genus) +
                      "; only rational components can be realized");
    }
    const auto required = points_on(g, v);
    for (const auto& p : required) {
      if (!model.coords.count(p)) {
        throw Error(ErrorCode::PointNotDeclared,
                    "point " + to_string(p) + " on " + where + " has no coordinate");
      }
    }
    std::set<ProjectivePoint> seen;
    for (const auto& [p, x] : model.coords) {
      if (p.kind == SpecialPoint::Kind::Auxiliary) {
        auto [it, fresh] = auxiliary_owner.emplace(p.id, v);
        if (!fresh) {
          throw Error(ErrorCode::GeometryMismatch,
                      "auxiliary point " + to_string(p) + " declared twice");
        }
      } else if (std::find(required.begin(), required.end(), p) == required.end()) {
        throw Error(ErrorCode::GeometryMismatch,
                    "point " + to_string(p) + " does not lie on " + where);
      }
      if (!seen.insert(x).second) {
        throw Error(ErrorCode::GeometryMismatch,
                    "coordinate " + to_string(x) + " used twice on " + where);
      }
    }
  }
  for (const auto& [e, a] : curve.alpha) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::GeometryMismatch,
                  "gluing unit given for unknown edge " + std::to_string(e));
    }
    if (a == 0) {
      throw Error(ErrorCode::GeometryMismatch,
                  "gluing unit of edge " + std::to_string(e) + " is zero");
    }
  }
}

void require_realized(const DualGraph& g, const ExplicitCurve& curve,
                      const VertexSet& W) {
  validate_geometry(g, curve);
  for (auto v : W) {
    if (g.vertex(v).genus != 0) {
      throw Error(ErrorCode::NonRationalComponent,
                  "vertex " + std::to_string(v) + " has genus " +
                      std::to_string(g.vertex(v).genus) +
                      "; only rational components can be realized");
    }
    if (!curve.realizes(v)) {
      throw Error(ErrorCode::GeometryMismatch,
                  "vertex " + std::to_string(v) + " has no explicit model");
    }
  }
}

}  // namespace mesacurve
