#pragma once

#include <stdexcept>
#include <string>

namespace mesacurve {

/**
 * Every failure raised by the library carries one of these codes. The
 * category (input problem, failed check, broken internal invariant) decides
 * the CLI exit status.
 */
enum class ErrorCode {
  // monoid-core
  RankMismatch,
  InvalidFace,
  // dual-graph
  InvalidGraph,
  Disconnected,
  GenusZeroCore,
  NotATree,
  InvalidSubset,
  // pl-mesa
  PLViolation,
  UnequalBoundaryLengths,
  DeadEndComponent,
  NoOutsideComponent,
  NoUniqueMaximum,
  MesaShape,
  // explicit-cohomology
  GeometryMismatch,
  NonRationalComponent,
  NonCanonicalTopGluing,
  NotAcyclic,
  PointNotDeclared,
  NotInSectionSpace,
  // contraction
  NotApplicable,
  TruncationExceeded,
  NotInRing,
  InvalidSingularity,
  // family-strata
  RankBoundExceeded,
  RadiusIncoherent,
  NotSimple,
  // cli-io
  SyntaxError,
  SchemaError,
  IntegrityError,
  UnknownCommand,
  MissingGeometry,
  // anything that should be impossible on valid input
  InvariantBreach,
};

enum class ErrorCategory { Input, Check, Internal };

ErrorCategory category_of(ErrorCode code);
const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mesacurve
