#pragma once

#include <compare>
#include <string>

#include "mesacurve/dual_graph.hpp"

namespace mesacurve {

/**
 * A point on the normalization of a component: one end of an edge, a marked
 * point, or an auxiliary point declared only in explicit geometry.
 *
 * Edge ends are numbered 0 (the smaller endpoint id) and 1. For a loop both
 * ends sit on the same component.
 */
struct SpecialPoint {
  enum class Kind { EdgeEnd, Marking, Auxiliary };

  Kind kind = Kind::EdgeEnd;
  long id = 0;
  int end = 0;

  static SpecialPoint edge_end(EdgeId e, int end) { return {Kind::EdgeEnd, e, end}; }
  static SpecialPoint marking(MarkingId h) { return {Kind::Marking, h, 0}; }
  static SpecialPoint auxiliary(long k) { return {Kind::Auxiliary, k, 0}; }

  auto operator<=>(const SpecialPoint&) const = default;
  bool operator==(const SpecialPoint&) const = default;
};

/// "e4", "e4'" (second end of a loop), "h2", "a0".
std::string to_string(const SpecialPoint& p);

/// Edge end lying on vertex v; for loops, end 0.
SpecialPoint end_at(const Edge& e, VertexId v);

}  // namespace mesacurve
