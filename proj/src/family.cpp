#include "mesacurve/family.hpp"

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

Stratum specialize_data(const DualGraph& g, const PLFunction& pl,
                        const std::map<VertexId, VertexId>& base_map,
                        const Face& face) {
  validate_face(face, g.rank());
  std::set<EdgeId> smoothed;
  for (const auto& e : g.edges()) {
    if (!e.delta.is_zero() && face_quotient(e.delta, face).is_zero()) {
      smoothed.insert(e.id);
    }
  }
  const auto contracted = contract_edges(g, smoothed);

  std::vector<Edge> edges;
  for (auto e : contracted.graph.edges()) {
    e.delta = face_quotient(e.delta, face);
    edges.push_back(std::move(e));
  }
  const std::size_t rank = g.rank() - face.killed.size();

  Stratum s;
  s.face = face;
  s.graph = DualGraph(rank, contracted.graph.vertices(), std::move(edges));
  for (const auto& [v, image] : contracted.vertex_map) {
    const GroupElement value = face_quotient(pl.value(v, g.rank()), face);
    auto [it, fresh] = s.pl.vertex_values.emplace(image, value);
    if (!fresh && it->second != value) {
      throw Error(ErrorCode::InvariantBreach,
                  "vertices merged into " + std::to_string(image) +
                      " receive different values " + to_string(it->second) +
                      " and " + to_string(value));
    }
  }
  s.pl.marking_slopes = pl.marking_slopes;
  s.pl = s.pl.normalized();
  for (const auto& [orig, mid] : base_map) s.vertex_map[orig] = contracted.vertex_map.at(mid);

  try {
    s.decomposition = decompose(s.graph, s.pl);
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::Internal) throw;
    s.shape_error = e.what();
    s.verdict = StratumVerdict::Fail;
  }
  return s;
}

std::map<VertexId, VertexId> identity_map(const DualGraph& g) {
  std::map<VertexId, VertexId> m;
  for (const auto& v : g.vertices()) m[v.id] = v.id;
  return m;
}

void judge(Stratum& s, const LogFamily& fam, AcyclicityMode mode) {
  if (!s.decomposition) return;
  const ExplicitCurve* geometry =
      s.face.killed.empty() && fam.geometry ? &*fam.geometry : nullptr;
  s.acyclicity = assess_acyclicity(s.graph, *s.decomposition, mode, geometry);
  s.verdict = StratumVerdict::Pass;
  for (const auto& v : s.acyclicity) {
    if (v.value == Acyclicity::No) {
      s.verdict = StratumVerdict::Fail;
      return;
    }
    if (v.value != Acyclicity::Yes) s.verdict = StratumVerdict::Indeterminate;
  }
}

}  // namespace

const char* to_string(StratumVerdict v) {
  switch (v) {
    case StratumVerdict::Pass: return "pass";
    case StratumVerdict::Fail: return "fail";
    case StratumVerdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

std::vector<MonoidElement> Stratum::radii() const {
  std::vector<MonoidElement> out;
  if (decomposition) {
    for (const auto& m : decomposition->mesas) out.push_back(m.radius);
  }
  return out;
}

Stratum specialize(const LogFamily& fam, const Face& face) {
  auto report = validate_pl(fam.graph, fam.pl);
  if (!report.ok()) {
    throw Error(ErrorCode::PLViolation, report.violations.front().reason);
  }
  return specialize_data(fam.graph, fam.pl, identity_map(fam.graph), face);
}

Stratum specialize(const Stratum& s, const Face& face_in_quotient) {
  Stratum out = specialize_data(s.graph, s.pl, s.vertex_map, face_in_quotient);
  // Report the face in the original coordinates.
  out.face = compose_faces(s.face, face_in_quotient,
                           s.graph.rank() + s.face.killed.size());
  return out;
}

Stratum evaluate_stratum(const LogFamily& fam, const Face& face,
                         AcyclicityMode mode) {
  Stratum s = specialize(fam, face);
  judge(s, fam, mode);
  return s;
}

FamilyReport validate_mesa_family(const LogFamily& fam, AcyclicityMode mode,
                                  std::size_t rank_bound) {
  if (fam.graph.rank() > rank_bound) {
    throw Error(ErrorCode::RankBoundExceeded,
                "monoid rank " + std::to_string(fam.graph.rank()) +
                    " exceeds the stratum enumeration bound " +
                    std::to_string(rank_bound));
  }
  FamilyReport report;
  report.mode = mode;
  report.pass = true;
  for (const auto& face : all_faces(fam.graph.rank())) {
    report.strata.push_back(evaluate_stratum(fam, face, mode));
    if (report.strata.back().verdict != StratumVerdict::Pass) report.pass = false;
  }
  return report;
}

bool is_simple(const FamilyReport& report) {
  if (!report.pass) return false;
  for (const auto& s : report.strata) {
    if (s.k() > 1) return false;
  }
  return true;
}

void check_radius_coherence(const MonoidElement& generic,
                            const std::vector<std::pair<Face, MonoidElement>>& strata) {
  for (const auto& [face, rho] : strata) {
    const MonoidElement expected = face_quotient(generic, face);
    if (expected != rho) {
      throw Error(ErrorCode::RadiusIncoherent,
                  "stratum " + to_string(face) + " has radius " + to_string(rho) +
                      " but the generic radius projects to " + to_string(expected));
    }
  }
}

RadiusReport global_radius(const FamilyReport& report) {
  if (!is_simple(report)) {
    throw Error(ErrorCode::NotSimple,
                report.pass ? "some stratum carries more than one mesa"
                            : "the family does not pass mesa validation");
  }
  RadiusReport out;
  for (const auto& s : report.strata) {
    const auto radii = s.radii();
    MonoidElement rho = radii.empty() ? MonoidElement::zero(s.graph.rank()) : radii.front();
    if (s.face.killed.empty()) out.generic = rho;
    out.strata.emplace_back(s.face, rho);
  }
  check_radius_coherence(out.generic, out.strata);
  return out;
}

}  // namespace mesacurve
