/**
 * Explicit realizations of nodal curves with rational components over Q.
 *
 * Each realized vertex is a copy of P^1 with an affine coordinate x. Every
 * special point on it (edge ends, markings, auxiliary points) gets a
 * coordinate in Q or infinity. Each edge carries a gluing unit alpha_e: a
 * section (sigma_v) of a line bundle on the curve satisfies
 * sigma_lo(p) = alpha_e * sigma_hi(p') across the node, where lo is the end
 * with the smaller vertex id. For a loop, end 0 plays the role of lo.
 */
#pragma once

#include <compare>
#include <map>
#include <string>

#include "mesacurve/dual_graph.hpp"
#include "mesacurve/linalg.hpp"
#include "mesacurve/special_point.hpp"

namespace mesacurve {

struct ProjectivePoint {
  bool at_infinity = false;
  Rational x;

  static ProjectivePoint infinity() { return {true, Rational(0)}; }
  static ProjectivePoint affine(const Rational& x) { return {false, x}; }

  bool operator==(const ProjectivePoint&) const = default;
  /// Finite points by value, infinity last.
  std::strong_ordering operator<=>(const ProjectivePoint& other) const;
};

/// "inf" or a rational string.
std::string to_string(const ProjectivePoint& p);
/// Accepts "inf" or a rational string.
ProjectivePoint parse_point(const std::string& text);

struct ComponentModel {
  std::map<SpecialPoint, ProjectivePoint> coords;

  bool operator==(const ComponentModel&) const = default;
};

struct ExplicitCurve {
  std::map<VertexId, ComponentModel> components;
  std::map<EdgeId, Rational> alpha;

  bool realizes(VertexId v) const { return components.count(v) > 0; }
  /// Gluing unit of an edge; 1 when not given.
  Rational alpha_of(EdgeId e) const;
  /// Throws PointNotDeclared.
  const ProjectivePoint& coordinate(VertexId v, const SpecialPoint& p) const;

  bool operator==(const ExplicitCurve&) const = default;
};

/**
 * Checks every declared component against the graph: the vertex exists and
 * is rational, all its edge ends and markings have coordinates, no
 * coordinate names a point of another vertex, coordinates are distinct, and
 * gluing units are nonzero and name existing edges.
 */
void validate_geometry(const DualGraph& g, const ExplicitCurve& curve);

/// validate_geometry plus: every vertex of W is realized.
void require_realized(const DualGraph& g, const ExplicitCurve& curve,
                      const VertexSet& W);

/// The special points of g that must lie on v (edge ends and markings).
std::vector<SpecialPoint> points_on(const DualGraph& g, VertexId v);

}  // namespace mesacurve
