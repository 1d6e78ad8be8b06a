#include "mesacurve/errors.hpp"

namespace mesacurve {

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvariantBreach:
      return ErrorCategory::Internal;
    case ErrorCode::PLViolation:
    case ErrorCode::UnequalBoundaryLengths:
    case ErrorCode::DeadEndComponent:
    case ErrorCode::NoOutsideComponent:
    case ErrorCode::NoUniqueMaximum:
    case ErrorCode::MesaShape:
    case ErrorCode::NotATree:
    case ErrorCode::GenusZeroCore:
    case ErrorCode::NotAcyclic:
    case ErrorCode::RadiusIncoherent:
    case ErrorCode::NotSimple:
    case ErrorCode::NonCanonicalTopGluing:
    case ErrorCode::NotApplicable:
    case ErrorCode::TruncationExceeded:
    case ErrorCode::NotInRing:
      return ErrorCategory::Check;
    default:
      return ErrorCategory::Input;
  }
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "rank_mismatch";
    case ErrorCode::InvalidFace: return "invalid_face";
    case ErrorCode::InvalidGraph: return "invalid_graph";
    case ErrorCode::Disconnected: return "disconnected";
    case ErrorCode::GenusZeroCore: return "genus_zero_core";
    case ErrorCode::NotATree: return "quotient_not_a_tree";
    case ErrorCode::InvalidSubset: return "invalid_subset";
    case ErrorCode::PLViolation: return "pl_violation";
    case ErrorCode::UnequalBoundaryLengths: return "unequal_boundary_lengths";
    case ErrorCode::DeadEndComponent: return "dead_end_component";
    case ErrorCode::NoOutsideComponent: return "no_outside_component";
    case ErrorCode::NoUniqueMaximum: return "no_unique_maximum";
    case ErrorCode::MesaShape: return "mesa_shape";
    case ErrorCode::GeometryMismatch: return "geometry_mismatch";
    case ErrorCode::NonRationalComponent: return "non_rational_component";
    case ErrorCode::NonCanonicalTopGluing: return "non_canonical_top_gluing";
    case ErrorCode::NotAcyclic: return "not_acyclic";
    case ErrorCode::PointNotDeclared: return "point_not_declared";
    case ErrorCode::NotInSectionSpace: return "not_in_section_space";
    case ErrorCode::NotApplicable: return "not_applicable";
    case ErrorCode::TruncationExceeded: return "truncation_exceeded";
    case ErrorCode::NotInRing: return "not_in_ring";
    case ErrorCode::InvalidSingularity: return "invalid_singularity";
    case ErrorCode::RankBoundExceeded: return "rank_bound_exceeded";
    case ErrorCode::RadiusIncoherent: return "radius_incoherent";
    case ErrorCode::NotSimple: return "not_simple";
    case ErrorCode::SyntaxError: return "syntax_error";
    case ErrorCode::SchemaError: return "schema_error";
    case ErrorCode::IntegrityError: return "integrity_error";
    case ErrorCode::UnknownCommand: return "unknown_command";
    case ErrorCode::MissingGeometry: return "missing_geometry";
    case ErrorCode::InvariantBreach: return "invariant_breach";
  }
  return "unknown";
}

}  // namespace mesacurve
