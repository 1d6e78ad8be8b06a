/**
 * Degrees of the line bundle O_C(sigma) attached to a PL section.
 *
 * On a component v, O_C(sigma) restricts to O_v(sum_p mu_p p) where mu_p is
 * the outgoing slope of sigma at the special point p. Over a geometric point
 * the base twist contributes no degree.
 */
#pragma once

#include <map>
#include <vector>

#include "mesacurve/pl_mesa.hpp"
#include "mesacurve/special_point.hpp"

namespace mesacurve {

/// Per-component divisor, keyed by special point.
using PointDivisor = std::map<SpecialPoint, long>;

long degree(const PointDivisor& d);

/**
 * Outgoing slope of pl at the special point p of v. For an edge to w this is
 * the multiple m with f_w - f_v = m * delta_e; markings return n_h; loop ends
 * return 0.
 */
long outgoing_slope(const DualGraph& g, const PLFunction& pl, VertexId v,
                    const SpecialPoint& p);

struct Multidegree {
  std::map<VertexId, long> degree;
  long total = 0;
  /// Vertices carrying a loop; their loop ends contribute net 0.
  VertexSet loop_incident;
};

Multidegree multidegree(const DualGraph& g, const PLFunction& pl);

/// The divisor sum_p mu_p p of O_C(pl) restricted to v (zero slopes omitted).
PointDivisor restriction_divisor(const DualGraph& g, const PLFunction& pl,
                                 VertexId v);

struct RestrictionShape {
  enum class Role { Top, Tail };

  VertexId component = 0;
  Role role = Role::Top;
  /// Top: +1 at each point leaving the top. Tail: +1 at points leading away
  /// from the top, -1 at the point heading towards it.
  PointDivisor divisor;
};

/**
 * Divisor shapes of O(-lambda) on the components of a mesa's support,
 * cross-checked against multidegree(-lambda). Throws InvariantBreach on
 * disagreement.
 */
std::vector<RestrictionShape> mesa_restriction_shapes(const DualGraph& g,
                                                      const Mesa& m);

}  // namespace mesacurve
