// mesacurve: command-line front end.
//
//   mesacurve <command> <document.json | -> [--mode guaranteed|generic]
//             [--truncation N] [--format json|text] [--face 1,3] [--exact]
//             [--rank-bound B] [--dot]

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "mesacurve/commands.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw mesacurve::Error(mesacurve::ErrorCode::SchemaError,
                           "cannot open input file " + path);
  }
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace mesacurve;

  CLI::App app{"Mesa decompositions and contracted singularities of log curves"};
  std::string command_name;
  std::string input = "-";
  std::string mode_name;
  std::string format_name = "text";
  std::string face_text;
  std::size_t truncation = 0;
  RunFlags flags;
  bool dot = false;

  app.add_option("command", command_name,
                 "validate, mesa, degrees, cohomology, contract or strata")
      ->required();
  app.add_option("document", input, "curve document (JSON), '-' for stdin");
  app.add_option("--mode", mode_name, "acyclicity mode: guaranteed or generic");
  app.add_option("--truncation", truncation, "jet truncation order for contract")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format_name, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--face", face_text, "strata: evaluate one face (1-based indices)");
  app.add_flag("--exact", flags.exact, "cohomology: require an explicit realization");
  app.add_option("--rank-bound", flags.rank_bound, "strata: largest monoid rank enumerated");
  app.add_flag("--dot", dot, "validate: print the dual graph in DOT format instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const OutputFormat format = format_name == "json" ? OutputFormat::Json : OutputFormat::Text;
  Report report;
  try {
    const Command command = parse_command(command_name);
    if (!mode_name.empty()) flags.mode = parse_mode(mode_name);
    if (truncation > 0) flags.truncation = truncation;
    if (!face_text.empty()) flags.face = parse_face_list(face_text);
    const std::string text = read_input(input);
    const CurveDocument doc = parse_document(text);
    if (dot) {
      std::cout << doc.graph.to_dot();
      return 0;
    }
    report = run(command, doc, flags);
  } catch (const Error& e) {
    report = error_report(command_name, e);
  } catch (const std::exception& e) {
    report = error_report(command_name, Error(ErrorCode::InvariantBreach, e.what()));
  }
  std::cout << report.render(format);
  return report.exit_code;
}
