#include "mesacurve/acyclicity.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "mesacurve/cohomology.hpp"
#include "mesacurve/errors.hpp"
#include "mesacurve/line_bundle.hpp"

namespace mesacurve {
namespace {

// Connected subsets are enumerated by bitmask up to this many components.
constexpr std::size_t kMaxSubsetSearch = 16;

std::size_t valence_in(const DualGraph& g, VertexId v, const VertexSet& W) {
  std::size_t n = 0;
  for (auto eid : g.incident_edges(v)) {
    const auto& e = g.edge(eid);
    if (e.is_loop()) {
      n += 2;
    } else if (W.count(e.other(v))) {
      ++n;
    }
  }
  return n;
}

bool contains_all(const VertexSet& big, const VertexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

AcyclicityVerdict proved_yes(std::string reason) {
  return {Acyclicity::Yes, std::move(reason), 0, false};
}

AcyclicityVerdict obstructed(long bound, const std::string& why,
                             AcyclicityMode mode) {
  AcyclicityVerdict v;
  v.h1_lower_bound = bound;
  if (mode == AcyclicityMode::Generic) {
    v.value = Acyclicity::No;
    v.reason = why + " forces h1 >= " + std::to_string(bound);
  } else {
    v.value = Acyclicity::Indeterminate;
    v.reason = why + " forces h1 >= " + std::to_string(bound) +
               "; guaranteed mode reports only proved acyclicity";
  }
  return v;
}

AcyclicityVerdict undecided(std::string reason) {
  return {Acyclicity::Indeterminate, std::move(reason), 0, false};
}

struct LowerBound {
  long value = 0;
  VertexSet witness;
  bool complete = true;
};

// max over connected Y of h1(L|_Y) >= -chi(L|_Y), sharpened by one when
// L|_Y has an obvious nonzero section.
LowerBound best_lower_bound(const DualGraph& g, const VertexSet& R,
                            const std::map<VertexId, long>& degree,
                            const VertexSet& effective, const VertexSet& canonical) {
  LowerBound out;
  if (R.size() > kMaxSubsetSearch) {
    out.complete = false;
    return out;
  }
  const std::vector<VertexId> ids(R.begin(), R.end());
  const std::size_t n = ids.size();
  std::vector<std::uint32_t> adjacent(n, 0);
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[ids[i]] = i;
  for (auto eid : g.induced_edges(R)) {
    const auto& e = g.edge(eid);
    adjacent[index[e.v]] |= 1u << index[e.w];
    adjacent[index[e.w]] |= 1u << index[e.v];
  }
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    // Connectivity by flood fill inside the mask.
    std::uint32_t reached = mask & (~mask + 1);
    for (;;) {
      std::uint32_t next = reached;
      for (std::size_t i = 0; i < n; ++i)
        if (reached >> i & 1u) next |= adjacent[i] & mask;
      if (next == reached) break;
      reached = next;
    }
    if (reached != mask) continue;
    VertexSet Y;
    long d = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        Y.insert(ids[i]);
        d += degree.at(ids[i]);
      }
    }
    const long bonus = contains_all(effective, Y) && contains_all(canonical, Y) ? 0 : 1;
    const long bound = genus(g, Y) - bonus - d;
    if (bound > out.value) {
      out.value = bound;
      out.witness = Y;
    }
  }
  return out;
}

std::string set_string(const VertexSet& s) {
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

bool is_rational_ring(const DualGraph& g, const VertexSet& R) {
  if (g.induced_edges(R).size() != R.size()) return false;
  for (auto v : R) {
    if (g.vertex(v).genus != 0 || valence_in(g, v, R) != 2) return false;
  }
  return true;
}

}  // namespace

const char* to_string(AcyclicityMode m) {
  return m == AcyclicityMode::Guaranteed ? "guaranteed" : "generic";
}

AcyclicityMode parse_mode(const std::string& text) {
  if (text == "guaranteed") return AcyclicityMode::Guaranteed;
  if (text == "generic") return AcyclicityMode::Generic;
  throw Error(ErrorCode::SchemaError,
              "mode must be \"guaranteed\" or \"generic\", got \"" + text + "\"");
}

DegreeProfile mesa_profile(const DualGraph& g, const Mesa& m) {
  DegreeProfile p;
  p.support = m.support;
  for (const auto& shape : mesa_restriction_shapes(g, m)) {
    p.degree[shape.component] = degree(shape.divisor);
  }
  p.effective = m.top;
  p.canonical = m.top;
  return p;
}

AcyclicityVerdict profile_acyclicity(const DualGraph& g, const DegreeProfile& p,
                                     AcyclicityMode mode) {
  VertexSet R = p.support;
  auto degree = p.degree;
  for (auto v : R) degree.try_emplace(v, 0);
  VertexSet effective = p.effective;

  // Peel rational leaves.
  for (;;) {
    if (R.size() <= 1) break;
    auto leaf = std::find_if(R.begin(), R.end(), [&](VertexId v) {
      return g.vertex(v).genus == 0 && valence_in(g, v, R) <= 1;
    });
    if (leaf == R.end()) break;
    const VertexId v = *leaf;
    const long d = degree[v];
    if (d <= -2) {
      return obstructed(-d - 1, "rational component " + std::to_string(v) +
                                    " of degree " + std::to_string(d),
                        mode);
    }
    R.erase(v);
    if (d == -1) {
      for (auto eid : g.incident_edges(v)) {
        const auto& e = g.edge(eid);
        if (R.count(e.other(v))) {
          degree[e.other(v)] -= 1;
          effective.erase(e.other(v));
        }
      }
    }
  }

  if (R.size() == 1 && g.induced_edges(R).empty()) {
    const VertexId v = *R.begin();
    const long gamma = g.vertex(v).genus;
    const long d = degree[v];
    if (gamma == 0) {
      if (d >= -1) return proved_yes("tree of rational components with leaf degrees >= 0");
      return obstructed(-d - 1, "rational component " + std::to_string(v) +
                                    " of degree " + std::to_string(d),
                        mode);
    }
    if (d > 2 * gamma - 2) {
      return proved_yes("component " + std::to_string(v) + " of genus " +
                        std::to_string(gamma) + " has degree " + std::to_string(d) +
                        " > 2g - 2");
    }
    const long bound = effective.count(v) ? gamma - d : gamma - 1 - d;
    if (bound > 0) {
      return obstructed(bound, "component " + std::to_string(v) + " of genus " +
                                   std::to_string(gamma) + " and degree " +
                                   std::to_string(d),
                        mode);
    }
    if (mode == AcyclicityMode::Generic) {
      return proved_yes("general line bundle of degree " + std::to_string(d) +
                        " on a general curve of genus " + std::to_string(gamma) +
                        " is nonspecial");
    }
    return undecided("degree " + std::to_string(d) + " <= 2g - 2 on component " +
                     std::to_string(v) + " of genus " + std::to_string(gamma));
  }

  const auto lb = best_lower_bound(g, R, degree, effective, p.canonical);
  if (lb.value > 0) {
    return obstructed(lb.value, "subcurve " + set_string(lb.witness), mode);
  }

  if (contains_all(p.canonical, R) && contains_all(effective, R) &&
      is_rational_ring(g, R)) {
    long d = 0;
    for (auto v : R) d += degree[v];
    if (d > 0) {
      return proved_yes("genus-1 ring of rational components with an effective "
                        "divisor of degree " +
                        std::to_string(d));
    }
  }

  const bool generic = mode == AcyclicityMode::Generic;
  bool uses_general_position = false;
  auto component_ok = [&](VertexId v) {
    const long gamma = g.vertex(v).genus;
    const long d = degree[v];
    if (gamma == 0) return d >= -1;
    if (d > 2 * gamma - 2) return true;
    if (!generic) return false;
    uses_general_position = true;
    return effective.count(v) ? d >= gamma : d >= gamma - 1;
  };
  auto capable = [&](VertexId v) {
    const long gamma = g.vertex(v).genus;
    const long d = degree[v] - static_cast<long>(valence_in(g, v, R));
    if (gamma == 0) return d >= -1;
    if (d > 2 * gamma - 2) return true;
    if (!generic) return false;
    uses_general_position = true;
    return d >= gamma - 1;
  };
  bool all_ok = true;
  for (auto v : R) {
    if (!component_ok(v)) {
      all_ok = false;
      break;
    }
  }
  if (all_ok) {
    bool matched = true;
    for (auto eid : g.induced_edges(R)) {
      const auto& e = g.edge(eid);
      if (!capable(e.v) && !capable(e.w)) {
        matched = false;
        break;
      }
    }
    if (matched) {
      return proved_yes(uses_general_position
                            ? "components acyclic and node values prescribable "
                              "(general position on positive-genus components)"
                            : "components acyclic and node values prescribable");
    }
  }
  if (!lb.complete) {
    return undecided("no certificate; subcurve search skipped above " +
                     std::to_string(kMaxSubsetSearch) + " components");
  }
  return undecided("no certificate of acyclicity found for core " + set_string(R));
}

AcyclicityVerdict generic_acyclicity(const DualGraph& g, const Mesa& m,
                                     AcyclicityMode mode) {
  return profile_acyclicity(g, mesa_profile(g, m), mode);
}

AcyclicityVerdict exact_acyclicity(const DualGraph& g, const ExplicitCurve& curve,
                                   const Mesa& m) {
  const auto h = cech_h(g, curve, mesa_bundle(g, curve, m));
  AcyclicityVerdict v;
  v.exact = true;
  v.h1_lower_bound = h.h1;
  v.value = h.h1 == 0 ? Acyclicity::Yes : Acyclicity::No;
  v.reason = "exact: h0 = " + std::to_string(h.h0) + ", h1 = " + std::to_string(h.h1);
  return v;
}

std::vector<AcyclicityVerdict> assess_acyclicity(const DualGraph& g,
                                                 MesaDecomposition& d,
                                                 AcyclicityMode mode,
                                                 const ExplicitCurve* geometry) {
  std::vector<AcyclicityVerdict> out;
  d.acyclicity.assign(d.mesas.size(), Acyclicity::NotEvaluated);
  for (std::size_t i = 0; i < d.mesas.size(); ++i) {
    const auto& m = d.mesas[i];
    const bool realized =
        geometry && std::all_of(m.support.begin(), m.support.end(),
                                [&](VertexId v) { return geometry->realizes(v); });
    out.push_back(realized ? exact_acyclicity(g, *geometry, m)
                           : generic_acyclicity(g, m, mode));
    d.acyclicity[i] = out.back().value;
  }
  return out;
}

}  // namespace mesacurve
