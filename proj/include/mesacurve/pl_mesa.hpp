/**
 * Piecewise-linear functions on dual graphs and their mesa decomposition.
 *
 * A PL function assigns f_v to each vertex and a slope n_h to each marking,
 * subject to f_v - f_w being an integer multiple of delta_e across every
 * edge. Values live in Z^r so that negated sections (used for line bundle
 * degrees) are representable; mesas require values in N^r.
 *
 * A mesa with support E, top F and radius rho takes the value
 * rho - lambda_E(v) on E, where lambda_E(v) is the length of the unique path
 * from F to v, and 0 elsewhere.
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mesacurve/dual_graph.hpp"
#include "mesacurve/errors.hpp"

namespace mesacurve {

struct PLFunction {
  std::map<VertexId, GroupElement> vertex_values;
  std::map<MarkingId, Integer> marking_slopes;

  static PLFunction zero() { return {}; }

  /// Missing vertices read as 0 of the given rank.
  GroupElement value(VertexId v, std::size_t rank) const;
  Integer slope(MarkingId h) const;

  PLFunction negated() const;
  PLFunction plus(const PLFunction& other, std::size_t rank) const;
  /// Drops explicit zero entries so equal functions compare equal.
  PLFunction normalized() const;

  bool operator==(const PLFunction&) const = default;
};

struct PLViolation {
  EdgeId edge;
  std::string reason;
};

struct PLReport {
  std::vector<PLViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the integer-multiple condition on every edge and id consistency.
PLReport validate_pl(const DualGraph& g, const PLFunction& pl);

enum class Acyclicity { Yes, No, Indeterminate, NotEvaluated };
const char* to_string(Acyclicity a);

struct Mesa {
  VertexSet support;
  VertexSet top;
  MonoidElement radius;
  /// lambda_E on the support.
  std::map<VertexId, MonoidElement> distance;
  PLFunction pl;

  bool operator==(const Mesa&) const = default;
};

/**
 * Builds the mesa with support E and top F. Throws, with distinct codes,
 * when the boundary path lengths differ, a component of E - F does not lead
 * outside, Gamma(E)/Gamma(F) is not a tree, or E has no outside neighbour.
 */
Mesa mesa_from(const DualGraph& g, const VertexSet& E, const VertexSet& F);

struct MesaCandidate {
  VertexSet support;
  VertexSet top;
  MonoidElement radius;

  bool operator==(const MesaCandidate&) const = default;
};

/**
 * Reads support, top and radius off a PL function: supports are the
 * components of the nonzero locus, the top is where the (unique) maximal
 * value is attained.
 */
std::vector<MesaCandidate> support_top_radius(const DualGraph& g,
                                              const PLFunction& pl);

struct MesaDecomposition {
  std::vector<Mesa> mesas;
  std::vector<Acyclicity> acyclicity;  // parallel to mesas

  std::size_t size() const { return mesas.size(); }
};

struct ShapeFailure {
  VertexSet support;
  std::string reason;
};

/// Error thrown by decompose; carries one entry per failing component.
class MesaShapeError : public Error {
 public:
  MesaShapeError(std::vector<ShapeFailure> failures);
  const std::vector<ShapeFailure>& failures() const { return failures_; }

 private:
  std::vector<ShapeFailure> failures_;
};

/**
 * Splits a PL function into mesas with disjoint supports. Acyclicity is left
 * NotEvaluated; see assess_acyclicity in cohomology.hpp.
 */
MesaDecomposition decompose(const DualGraph& g, const PLFunction& pl);

/// True iff the top is the core of the support. Genus-0 support is an error.
bool is_small(const DualGraph& g, const Mesa& m);

}  // namespace mesacurve
