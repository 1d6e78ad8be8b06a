/**
 * Acyclicity of mesas, H^1(E, O_E(-lambda)) = 0.
 *
 * Without explicit geometry only component genera and restriction degrees
 * are known. The engine peels rational leaves (which never change h1 when
 * the leaf degree is >= 0), then looks at what remains:
 *
 *  - a lower bound h1 >= h1(L|_Y) >= -chi(L|_Y) (improved by one when Y lies
 *    in the top and L|_Y = O_Y(D) with D effective) over connected
 *    subcurves Y proves h1 > 0;
 *  - a genus-1 ring of rational curves in the top with positive degree, or a
 *    curve whose components are individually acyclic and whose nodes can
 *    each be prescribed from a component with enough sections, proves
 *    h1 = 0.
 *
 * Guaranteed mode only reports proved acyclicity ("yes") and otherwise says
 * "indeterminate"; generic mode also reports proved obstructions as "no"
 * and uses general-position thresholds on smooth positive-genus components.
 * Rational components always use exact thresholds, so a "yes" is never
 * contradicted by an explicit rational realization.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mesacurve/geometry.hpp"
#include "mesacurve/pl_mesa.hpp"

namespace mesacurve {

enum class AcyclicityMode { Guaranteed, Generic };

const char* to_string(AcyclicityMode m);
/// "guaranteed" or "generic"; throws SchemaError otherwise.
AcyclicityMode parse_mode(const std::string& text);

struct AcyclicityVerdict {
  Acyclicity value = Acyclicity::NotEvaluated;
  std::string reason;
  /// Proved lower bound on h1 (0 when none was found).
  long h1_lower_bound = 0;
  /// True when decided by exact cohomology on an explicit realization.
  bool exact = false;
};

/// Restriction degrees of a line bundle on a subcurve, plus what is known
/// about its shape.
struct DegreeProfile {
  VertexSet support;
  std::map<VertexId, long> degree;
  /// Components where the divisor is effective and avoids internal nodes.
  VertexSet effective;
  /// Components across which the gluing has trivial holonomy.
  VertexSet canonical;
};

/// The profile of O_E(-lambda) on the support of a mesa.
DegreeProfile mesa_profile(const DualGraph& g, const Mesa& m);

AcyclicityVerdict profile_acyclicity(const DualGraph& g, const DegreeProfile& p,
                                     AcyclicityMode mode);

AcyclicityVerdict generic_acyclicity(const DualGraph& g, const Mesa& m,
                                     AcyclicityMode mode);

/// Exact verdict from cech_h on a realized support.
AcyclicityVerdict exact_acyclicity(const DualGraph& g, const ExplicitCurve& curve,
                                   const Mesa& m);

/**
 * Fills d.acyclicity. A mesa whose support is realized by geometry gets the
 * exact verdict, the others the generic engine's.
 */
std::vector<AcyclicityVerdict> assess_acyclicity(const DualGraph& g,
                                                 MesaDecomposition& d,
                                                 AcyclicityMode mode,
                                                 const ExplicitCurve* geometry);

}  // namespace mesacurve
