/**
 * Combinatorial families over the free monoid N^r and their strata.
 *
 * A stratum is a face S of N^r: the generators in S become units, so every
 * node whose smoothing parameter is supported in S is smoothed. Graph and PL
 * data of the stratum come from contracting those edges and projecting all
 * monoid values away from S.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mesacurve/acyclicity.hpp"
#include "mesacurve/geometry.hpp"
#include "mesacurve/pl_mesa.hpp"

namespace mesacurve {

struct LogFamily {
  DualGraph graph;
  PLFunction pl;
  /// Realization of the generic fiber, if any; used on the generic stratum only.
  std::optional<ExplicitCurve> geometry;
};

enum class StratumVerdict { Pass, Fail, Indeterminate };
const char* to_string(StratumVerdict v);

struct Stratum {
  Face face;
  DualGraph graph;
  PLFunction pl;
  /// Vertex of the family graph to vertex of the stratum graph.
  std::map<VertexId, VertexId> vertex_map;
  std::optional<MesaDecomposition> decomposition;
  /// Set when decompose failed.
  std::string shape_error;
  std::vector<AcyclicityVerdict> acyclicity;
  StratumVerdict verdict = StratumVerdict::Indeterminate;

  /// Number of mesas (0 when the decomposition failed).
  std::size_t k() const { return decomposition ? decomposition->size() : 0; }
  std::vector<MonoidElement> radii() const;
};

/// Contracts the edges killed by S and projects the PL data; also attempts
/// the mesa decomposition. Acyclicity is not evaluated here.
Stratum specialize(const LogFamily& fam, const Face& face);

/// Same operation applied to a single stratum (faces in the stratum's own
/// coordinates), for functoriality checks.
Stratum specialize(const Stratum& s, const Face& face_in_quotient);

struct FamilyReport {
  std::vector<Stratum> strata;  // ordered as all_faces
  bool pass = false;
  AcyclicityMode mode = AcyclicityMode::Guaranteed;
};

constexpr std::size_t kDefaultRankBound = 12;

/**
 * Runs specialize and the acyclicity engines over all 2^r faces.
 * RankBoundExceeded when r > bound; PLViolation when the family's PL data is
 * invalid at the generic stratum.
 */
FamilyReport validate_mesa_family(const LogFamily& fam, AcyclicityMode mode,
                                  std::size_t rank_bound = kDefaultRankBound);

/// Strata evaluated and judged for one face only.
Stratum evaluate_stratum(const LogFamily& fam, const Face& face,
                         AcyclicityMode mode);

/// Every stratum has at most one mesa. Requires a passing report (NotSimple
/// is not thrown; a failing report yields false).
bool is_simple(const FamilyReport& report);

struct RadiusReport {
  MonoidElement generic;
  std::vector<std::pair<Face, MonoidElement>> strata;
};

/**
 * Checks face_quotient(rho_generic, S) = rho_S on every stratum, where an
 * empty stratum has rho_S = 0. RadiusIncoherent otherwise.
 */
void check_radius_coherence(const MonoidElement& generic,
                            const std::vector<std::pair<Face, MonoidElement>>& strata);

/// The global radius of a simple family; NotSimple when the report fails or
/// some stratum has two mesas.
RadiusReport global_radius(const FamilyReport& report);

}  // namespace mesacurve
