/**
 * Command dispatch for the command-line tool.
 *
 * Every command produces a Report: a list of named checks with a status and
 * a plain-language statement of what is checked, a JSON payload, and a
 * process exit code (0 all checks pass, 1 some check fails or is
 * undecided, 2 input error, 3 internal invariant breach).
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mesacurve/document.hpp"
#include "mesacurve/family.hpp"

namespace mesacurve {

enum class Command { Validate, Mesa, Degrees, Cohomology, Contract, Strata };

/// UnknownCommand for anything else.
Command parse_command(const std::string& name);
const char* to_string(Command c);

enum class OutputFormat { Json, Text };

struct RunFlags {
  std::optional<AcyclicityMode> mode;
  std::optional<std::size_t> truncation;
  std::optional<Face> face;
  /// cohomology: require exact computation (MissingGeometry without it).
  bool exact = false;
  std::size_t rank_bound = kDefaultRankBound;
};

/// Parses "1,3" (1-based generator indices) into a face.
Face parse_face_list(const std::string& text);

enum class CheckStatus { Pass, Fail, Indeterminate, Info };
const char* to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Info;
  std::string statement;
  std::string detail;
};

struct Report {
  std::string command;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  /// Extra human-readable lines (tables, ring presentations).
  std::vector<std::string> text_lines;
  int exit_code = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
  std::string render(OutputFormat f) const;
};

int exit_code_for(const Error& e);

/// Runs a command. Input and internal errors are turned into a report with
/// the matching exit code, never thrown.
Report run(Command command, const CurveDocument& doc, const RunFlags& flags);

/// Report for a failure before a command could run (parse errors etc.).
Report error_report(const std::string& command, const Error& e);

}  // namespace mesacurve
