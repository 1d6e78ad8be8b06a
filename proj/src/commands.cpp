#include "mesacurve/commands.hpp"

#include <sstream>

#include "mesacurve/cohomology.hpp"
#include "mesacurve/contraction.hpp"
#include "mesacurve/family.hpp"
#include "mesacurve/line_bundle.hpp"

namespace mesacurve {
namespace {

using nlohmann::json;

constexpr std::size_t kDefaultTruncation = 6;

json set_json(const VertexSet& s) {
  json out = json::array();
  for (auto v : s) out.push_back(v);
  return out;
}

json face_json(const Face& f) {
  json out = json::array();
  for (auto i : f.killed) out.push_back(i + 1);
  return out;
}

json rational_row(const std::vector<Rational>& row) {
  json out = json::array();
  for (const auto& x : row) out.push_back(to_string(x));
  return out;
}

json matrix_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(rational_row(m.row(r)));
  return out;
}

std::string set_text(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

CheckStatus status_of(Acyclicity a) {
  switch (a) {
    case Acyclicity::Yes: return CheckStatus::Pass;
    case Acyclicity::No: return CheckStatus::Fail;
    default: return CheckStatus::Indeterminate;
  }
}

CheckStatus status_of(StratumVerdict v) {
  switch (v) {
    case StratumVerdict::Pass: return CheckStatus::Pass;
    case StratumVerdict::Fail: return CheckStatus::Fail;
    case StratumVerdict::Indeterminate: return CheckStatus::Indeterminate;
  }
  return CheckStatus::Indeterminate;
}

json verdict_json(const AcyclicityVerdict& v) {
  return json{{"verdict", to_string(v.value)},
              {"exact", v.exact},
              {"h1_lower_bound", v.h1_lower_bound},
              {"reason", v.reason}};
}

const char* kAcyclicStatement = "H^1(E, O_E(-lambda)) = 0 on the support of the mesa";

struct Context {
  const CurveDocument& doc;
  AcyclicityMode mode;
  std::size_t truncation;
  const ExplicitCurve* geometry;
};

// Decomposes, recording the shape check; empty on failure.
std::optional<MesaDecomposition> decompose_checked(const Context& ctx, Report& r) {
  try {
    auto d = decompose(ctx.doc.graph, ctx.doc.pl);
    r.checks.push_back({"mesa_shape", CheckStatus::Pass,
                        "the PL function is a sum of mesas with disjoint supports",
                        std::to_string(d.size()) + " mesa(s)"});
    return d;
  } catch (const MesaShapeError& e) {
    json failures = json::array();
    for (const auto& f : e.failures()) {
      failures.push_back(json{{"support", set_json(f.support)}, {"reason", f.reason}});
    }
    r.data["failures"] = failures;
    r.checks.push_back({"mesa_shape", CheckStatus::Fail,
                        "the PL function is a sum of mesas with disjoint supports",
                        e.what()});
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::Check) throw;
    r.checks.push_back({"mesa_shape", CheckStatus::Fail,
                        "the PL function is a sum of mesas with disjoint supports",
                        e.what()});
  }
  return std::nullopt;
}

json mesa_json(const DualGraph& g, const Mesa& m) {
  json j{{"support", set_json(m.support)},
         {"top", set_json(m.top)},
         {"radius", to_json(m.radius)},
         {"genus", genus(g, m.support)}};
  if (genus(g, m.support) > 0) {
    j["core"] = set_json(core(g, m.support));
    j["small"] = is_small(g, m);
  } else {
    j["core"] = nullptr;
    j["small"] = nullptr;
  }
  return j;
}

void run_validate(const Context& ctx, Report& r) {
  const auto& g = ctx.doc.graph;
  r.data["rank"] = g.rank();
  r.data["vertices"] = g.vertices().size();
  r.data["edges"] = g.edges().size();
  r.data["genus"] = genus(g);
  r.checks.push_back({"graph", CheckStatus::Pass,
                      "the dual graph is connected, ids are consistent and every "
                      "delta lies in N^r",
                      "genus " + std::to_string(genus(g))});
  const auto pl = validate_pl(g, ctx.doc.pl);
  json violations = json::array();
  for (const auto& v : pl.violations) {
    violations.push_back(json{{"edge", v.edge}, {"reason", v.reason}});
  }
  r.data["violations"] = violations;
  r.checks.push_back({"pl_condition",
                      pl.ok() ? CheckStatus::Pass : CheckStatus::Fail,
                      "f_w - f_v is an integer multiple of delta_e across every edge",
                      pl.ok() ? "" : pl.violations.front().reason});
  if (ctx.geometry) {
    r.checks.push_back({"geometry", CheckStatus::Pass,
                        "realized components are rational with distinct "
                        "coordinates at all special points",
                        std::to_string(ctx.geometry->components.size()) +
                            " realized component(s)"});
  }
}

void run_mesa(const Context& ctx, Report& r) {
  const auto& g = ctx.doc.graph;
  auto d = decompose_checked(ctx, r);
  if (!d) return;
  const auto verdicts = assess_acyclicity(g, *d, ctx.mode, ctx.geometry);
  json mesas = json::array();
  for (std::size_t i = 0; i < d->size(); ++i) {
    const auto& m = d->mesas[i];
    json j = mesa_json(g, m);
    j["acyclicity"] = verdict_json(verdicts[i]);
    mesas.push_back(j);
    r.checks.push_back({"acyclic[" + std::to_string(i) + "]",
                        status_of(verdicts[i].value), kAcyclicStatement,
                        verdicts[i].reason});
    std::ostringstream line;
    line << "mesa " << i << ": support " << set_text(m.support) << ", top "
         << set_text(m.top) << ", radius " << m.radius << ", acyclic "
         << to_string(verdicts[i].value);
    r.text_lines.push_back(line.str());
  }
  r.data["mesas"] = mesas;
  r.data["k"] = d->size();
  r.data["simple"] = d->size() <= 1;
  r.data["mode"] = to_string(ctx.mode);
}

void run_degrees(const Context& ctx, Report& r) {
  const auto& g = ctx.doc.graph;
  const auto pl = validate_pl(g, ctx.doc.pl);
  if (!pl.ok()) {
    r.checks.push_back({"pl_condition", CheckStatus::Fail,
                        "f_w - f_v is an integer multiple of delta_e across every edge",
                        pl.violations.front().reason});
    return;
  }
  const auto plus = multidegree(g, ctx.doc.pl);
  const auto minus = multidegree(g, ctx.doc.pl.negated());
  json table = json::object();
  r.text_lines.push_back("vertex  deg O(sigma)  deg O(-sigma)");
  for (const auto& v : g.vertices()) {
    table[std::to_string(v.id)] =
        json{{"sigma", plus.degree.at(v.id)}, {"minus_sigma", minus.degree.at(v.id)}};
    std::ostringstream line;
    line << v.id << "  " << plus.degree.at(v.id) << "  " << minus.degree.at(v.id);
    r.text_lines.push_back(line.str());
  }
  r.data["degrees"] = table;
  r.data["total"] = json{{"sigma", plus.total}, {"minus_sigma", minus.total}};
  r.data["loop_incident"] = set_json(plus.loop_incident);
  r.checks.push_back({"degrees", CheckStatus::Pass,
                      "the degree of O(sigma) on a component is the sum of the "
                      "outgoing slopes of sigma there",
                      "total degree " + std::to_string(plus.total)});
}

void run_cohomology(const Context& ctx, bool require_exact, Report& r) {
  const auto& g = ctx.doc.graph;
  auto d = decompose_checked(ctx, r);
  if (!d) return;
  json mesas = json::array();
  for (std::size_t i = 0; i < d->size(); ++i) {
    const auto& m = d->mesas[i];
    const std::string tag = "[" + std::to_string(i) + "]";
    const bool realized =
        ctx.geometry && std::all_of(m.support.begin(), m.support.end(), [&](VertexId v) {
          return ctx.geometry->realizes(v);
        });
    if (require_exact && !realized) {
      throw Error(ErrorCode::MissingGeometry,
                  "exact cohomology requested but mesa " + std::to_string(i) +
                      " is not realized by the document's geometry");
    }
    json j{{"support", set_json(m.support)}};
    const auto generic = generic_acyclicity(g, m, ctx.mode);
    j["generic"] = verdict_json(generic);
    j["generic"]["mode"] = to_string(ctx.mode);
    if (realized) {
      const auto h = cech_h(g, *ctx.geometry, mesa_bundle(g, *ctx.geometry, m));
      j["exact"] = json{{"h0", h.h0}, {"h1", h.h1}, {"chi", h.chi}};
      r.checks.push_back({"acyclic" + tag,
                          h.h1 == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                          kAcyclicStatement,
                          "exact: h0 = " + std::to_string(h.h0) +
                              ", h1 = " + std::to_string(h.h1)});
      const bool consistent = generic.value != Acyclicity::Yes || h.h1 == 0;
      r.checks.push_back({"oracle_consistency" + tag,
                          consistent ? CheckStatus::Pass : CheckStatus::Fail,
                          "an acyclicity verdict of the generic engine is confirmed "
                          "by exact cohomology",
                          std::string("generic verdict ") + to_string(generic.value)});
      std::ostringstream line;
      line << "mesa " << i << ": h0 = " << h.h0 << ", h1 = " << h.h1
           << ", generic verdict " << to_string(generic.value);
      r.text_lines.push_back(line.str());
    } else {
      r.checks.push_back({"acyclic" + tag, status_of(generic.value), kAcyclicStatement,
                          generic.reason});
      r.text_lines.push_back("mesa " + std::to_string(i) + ": generic verdict " +
                             to_string(generic.value) + " (" + generic.reason + ")");
    }
    mesas.push_back(j);
  }
  r.data["mesas"] = mesas;
  r.data["mode"] = to_string(ctx.mode);
}

json graph_json(const DualGraph& g) {
  json vertices = json::array();
  for (const auto& v : g.vertices()) {
    json markings = json::array();
    for (auto h : v.markings) markings.push_back(h);
    vertices.push_back(json{{"id", v.id}, {"genus", v.genus}, {"markings", markings}});
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(json{{"id", e.id}, {"ends", {e.v, e.w}}, {"delta", to_json(e.delta)}});
  }
  return json{{"vertices", vertices}, {"edges", edges}, {"genus", genus(g)}};
}

void run_contract(const Context& ctx, Report& r) {
  const auto& g = ctx.doc.graph;
  auto d = decompose_checked(ctx, r);
  if (!d) return;
  const auto verdicts = assess_acyclicity(g, *d, ctx.mode, ctx.geometry);
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    r.checks.push_back({"acyclic[" + std::to_string(i) + "]",
                        status_of(verdicts[i].value), kAcyclicStatement,
                        verdicts[i].reason});
  }
  ContractedFiber fiber;
  try {
    fiber = contract_fiber(g, *d, ctx.geometry);
  } catch (const Error& e) {
    if (e.category() != ErrorCategory::Check) throw;
    r.checks.push_back({"contraction", CheckStatus::Fail,
                        "each mesa support collapses to a singular point", e.what()});
    return;
  }
  r.checks.push_back({"genus_preserved", CheckStatus::Pass,
                      "arithmetic genus before contraction equals genus after "
                      "plus the genera of the new singular points",
                      "genus " + std::to_string(genus(g))});
  json singularities = json::array();
  for (std::size_t i = 0; i < fiber.singularities.size(); ++i) {
    const auto& s = fiber.singularities[i];
    const std::string tag = "[" + std::to_string(i) + "]";
    json branches = json::array();
    for (const auto& b : s.branch_data) {
      json jb{{"edge", b.edge}, {"outside", b.outside}};
      jb["coordinate"] = b.coordinate ? json(to_string(*b.coordinate)) : json(nullptr);
      branches.push_back(jb);
    }
    json js{{"point", s.point},
            {"support", set_json(s.support)},
            {"genus", s.genus},
            {"branches", s.branches},
            {"delta", s.delta},
            {"elliptic_gorenstein", to_string(s.elliptic_gorenstein)},
            {"type", s.shape},
            {"branch_data", branches}};
    r.checks.push_back({"genus_formula" + tag, CheckStatus::Pass,
                        "the singular point has genus delta - m + 1 equal to the "
                        "genus of the collapsed support",
                        "g = " + std::to_string(s.genus) + ", delta = " +
                            std::to_string(s.delta) + ", m = " +
                            std::to_string(s.branches)});
    r.text_lines.push_back("singularity " + std::to_string(i) + " at vertex " +
                           std::to_string(s.point) + ": genus " +
                           std::to_string(s.genus) + ", " +
                           std::to_string(s.branches) + " branch(es), delta " +
                           std::to_string(s.delta) + ", elliptic Gorenstein " +
                           to_string(s.elliptic_gorenstein) + ", type: " + s.shape);
    if (s.values) {
      js["V"] = matrix_json(s.values->subspace);
      js["functionals"] = matrix_json(s.values->functionals);
      json boundary = json::array();
      for (auto e : s.values->boundary) boundary.push_back(e);
      js["V_columns"] = boundary;
      js["constants"] = rational_row(s.constants);
      const auto presentation = ring_presentation(*s.values);
      js["ring_presentation"] = json{{"value_conditions", presentation.value_conditions},
                                     {"jet_relations", presentation.jet_relations},
                                     {"text", presentation.to_text()}};
      std::istringstream lines(presentation.to_text());
      for (std::string line; std::getline(lines, line);) {
        r.text_lines.push_back("  " + line);
      }
      const auto ring = TruncatedRing::from(*s.values, ctx.truncation);
      const long delta = static_cast<long>(ring.delta());
      js["truncated_delta"] = delta;
      r.checks.push_back({"truncated_delta" + tag,
                          delta == s.delta ? CheckStatus::Pass : CheckStatus::Fail,
                          "the codimension of the truncated local ring in the branch "
                          "polynomials equals delta",
                          "truncation " + std::to_string(ctx.truncation) +
                              ", computed " + std::to_string(delta)});
    }
    singularities.push_back(js);
  }
  r.data["singularities"] = singularities;
  r.data["contracted"] = graph_json(fiber.graph);
}

json stratum_json(const Stratum& s) {
  json radii = json::array();
  for (const auto& rho : s.radii()) radii.push_back(to_json(rho));
  json acyclicity = json::array();
  for (const auto& v : s.acyclicity) acyclicity.push_back(verdict_json(v));
  json j{{"face", face_json(s.face)},
         {"k", s.k()},
         {"radii", radii},
         {"verdict", to_string(s.verdict)},
         {"acyclicity", acyclicity}};
  if (!s.shape_error.empty()) j["shape_error"] = s.shape_error;
  return j;
}

std::string stratum_line(const Stratum& s) {
  std::ostringstream line;
  line << to_string(s.face) << "  k=" << s.k() << "  radii=";
  bool first = true;
  for (const auto& rho : s.radii()) {
    line << (first ? "" : ",") << rho;
    first = false;
  }
  if (first) line << "-";
  line << "  " << to_string(s.verdict);
  return line.str();
}

void run_strata(const Context& ctx, const RunFlags& flags, Report& r) {
  LogFamily fam{ctx.doc.graph, ctx.doc.pl, ctx.doc.geometry};
  const char* statement =
      "the stratum's PL function is a sum of acyclic mesas with disjoint supports";
  r.text_lines.push_back("face  k  radii  verdict");
  if (flags.face) {
    const auto s = evaluate_stratum(fam, *flags.face, ctx.mode);
    r.checks.push_back({"stratum " + to_string(s.face), status_of(s.verdict), statement,
                        s.shape_error});
    r.text_lines.push_back(stratum_line(s));
    r.data["strata"] = json::array({stratum_json(s)});
    return;
  }
  const auto report = validate_mesa_family(fam, ctx.mode, flags.rank_bound);
  json strata = json::array();
  for (const auto& s : report.strata) {
    r.checks.push_back({"stratum " + to_string(s.face), status_of(s.verdict), statement,
                        s.shape_error});
    r.text_lines.push_back(stratum_line(s));
    strata.push_back(stratum_json(s));
  }
  r.data["strata"] = strata;
  r.data["pass"] = report.pass;
  r.data["mode"] = to_string(ctx.mode);
  const bool simple = is_simple(report);
  r.data["simple"] = simple;
  if (simple) {
    try {
      const auto radius = global_radius(report);
      r.data["global_radius"] = to_json(radius.generic);
      r.checks.push_back({"radius_coherence", CheckStatus::Pass,
                          "the generic radius projects to the radius of every stratum",
                          "rho = " + to_string(radius.generic)});
    } catch (const Error& e) {
      if (e.category() != ErrorCategory::Check) throw;
      r.checks.push_back({"radius_coherence", CheckStatus::Fail,
                          "the generic radius projects to the radius of every stratum",
                          e.what()});
    }
  }
}

void finish(Report& r) {
  r.exit_code = 0;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Fail || c.status == CheckStatus::Indeterminate) {
      r.exit_code = 1;
    }
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "validate") return Command::Validate;
  if (name == "mesa") return Command::Mesa;
  if (name == "degrees") return Command::Degrees;
  if (name == "cohomology") return Command::Cohomology;
  if (name == "contract") return Command::Contract;
  if (name == "strata") return Command::Strata;
  throw Error(ErrorCode::UnknownCommand, "unknown command \"" + name + "\"");
}

const char* to_string(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Mesa: return "mesa";
    case Command::Degrees: return "degrees";
    case Command::Cohomology: return "cohomology";
    case Command::Contract: return "contract";
    case Command::Strata: return "strata";
  }
  return "?";
}

Face parse_face_list(const std::string& text) {
  Face f;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    long i = 0;
    try {
      i = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || i < 1) {
      throw Error(ErrorCode::InvalidFace,
                  "face entries are 1-based generator indices, got \"" + item + "\"");
    }
    f.killed.insert(static_cast<std::size_t>(i - 1));
  }
  return f;
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Indeterminate: return "indeterminate";
    case CheckStatus::Info: return "info";
  }
  return "?";
}

json Report::to_json() const {
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back(json{{"name", c.name},
                               {"status", mesacurve::to_string(c.status)},
                               {"statement", c.statement},
                               {"detail", c.detail}});
  }
  return json{{"command", command},
              {"status", exit_code == 0 ? "pass" : "fail"},
              {"exit_code", exit_code},
              {"checks", checks_json},
              {"data", data}};
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << command << ": " << (exit_code == 0 ? "PASS" : "FAIL") << " (exit "
      << exit_code << ")\n";
  for (const auto& c : checks) {
    out << "  [" << mesacurve::to_string(c.status) << "] " << c.name << ": "
        << c.statement;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << '\n';
  }
  for (const auto& line : text_lines) out << line << '\n';
  return out.str();
}

std::string Report::render(OutputFormat f) const {
  return f == OutputFormat::Json ? to_json().dump(2) + "\n" : to_text();
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::Input: return 2;
    case ErrorCategory::Check: return 1;
    case ErrorCategory::Internal: return 3;
  }
  return 3;
}

Report error_report(const std::string& command, const Error& e) {
  Report r;
  r.command = command;
  r.checks.push_back({"error", CheckStatus::Fail, "the request could be processed",
                      std::string(to_string(e.code())) + ": " + e.what()});
  r.data["error"] = json{{"code", to_string(e.code())}, {"message", e.what()}};
  if (auto* de = dynamic_cast<const DocumentError*>(&e)) r.data["error"]["path"] = de->path();
  r.exit_code = exit_code_for(e);
  return r;
}

Report run(Command command, const CurveDocument& doc, const RunFlags& flags) {
  Report r;
  r.command = to_string(command);
  const Context ctx{doc,
                    flags.mode.value_or(doc.options.mode.value_or(AcyclicityMode::Guaranteed)),
                    flags.truncation.value_or(doc.options.truncation.value_or(kDefaultTruncation)),
                    doc.geometry ? &*doc.geometry : nullptr};
  try {
    switch (command) {
      case Command::Validate: run_validate(ctx, r); break;
      case Command::Mesa: run_mesa(ctx, r); break;
      case Command::Degrees: run_degrees(ctx, r); break;
      case Command::Cohomology: run_cohomology(ctx, flags.exact, r); break;
      case Command::Contract: run_contract(ctx, r); break;
      case Command::Strata: run_strata(ctx, flags, r); break;
    }
  } catch (const Error& e) {
    Report failed = error_report(r.command, e);
    failed.checks.insert(failed.checks.begin(), r.checks.begin(), r.checks.end());
    return failed;
  }
  finish(r);
  return r;
}

}  // namespace mesacurve
