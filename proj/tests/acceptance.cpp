// Acceptance run: one line per criterion, nonzero exit if any fails.
//
// Seeds and time limits are fixed here; every random instance is
// reproducible from the printed seed.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generators.hpp"
#include "mesacurve/acyclicity.hpp"
#include "mesacurve/cohomology.hpp"
#include "mesacurve/contraction.hpp"
#include "mesacurve/errors.hpp"
#include "mesacurve/family.hpp"
#include "oracle.hpp"

using namespace mesacurve;
using testsupport::CycleKind;
using testsupport::Rng;
using testsupport::uniform;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note.str("");
      note << "first failure: " << what << "; ";
    }
  }
};

bool run_criterion(int number, const char* title, double limit_seconds, std::uint64_t seed,
                   const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.note.str("");
    out.note << "exception: " << e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing << secs << "s";
  if (limit_seconds > 0) {
    timing << " (limit " << limit_seconds << "s)";
    if (secs >= limit_seconds) {
      if (out.ok) out.note.str("");
      out.ok = false;
      out.note << " time limit exceeded";
    }
  }
  std::cout << "criterion " << number << ": " << (out.ok ? "PASS" : "FAIL") << "  " << title
            << "  [seed " << seed << ", " << timing.str() << "] " << out.note.str() << std::endl;
  return out.ok;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

std::string coefficient_text(const Rational& k) {
  if (k == 1) return "";
  if (k == -1) return "-";
  return to_string(k) + "*";
}

// Rational loops on vertices 0..g-1 chained by bridges, one tail g+i on each.
struct CuspChain {
  DualGraph graph;
  PLFunction pl;
  ExplicitCurve curve;
};

CuspChain cusp_chain(long g) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  EdgeId next = 0;
  for (long i = 0; i < g; ++i) vs.push_back({static_cast<VertexId>(i), 0, {}});
  for (long i = 0; i < g; ++i) vs.push_back({static_cast<VertexId>(g + i), 0, {}});
  CuspChain c;
  std::map<VertexId, ComponentModel> models;
  auto at = [](long x) { return ProjectivePoint::affine(Rational(x)); };
  for (long i = 0; i < g; ++i) {
    const auto v = static_cast<VertexId>(i);
    const EdgeId loop = next++;
    es.push_back({loop, v, v, MonoidElement{1}});
    models[v].coords[SpecialPoint::edge_end(loop, 0)] = at(0);
    models[v].coords[SpecialPoint::edge_end(loop, 1)] = ProjectivePoint::infinity();
    const EdgeId tail = next++;
    es.push_back({tail, v, static_cast<VertexId>(g + i), MonoidElement{1}});
    models[v].coords[SpecialPoint::edge_end(tail, 0)] = at(-1);
  }
  for (long i = 0; i + 1 < g; ++i) {
    const EdgeId bridge = next++;
    es.push_back({bridge, static_cast<VertexId>(i), static_cast<VertexId>(i + 1), MonoidElement{1}});
    models[static_cast<VertexId>(i)].coords[SpecialPoint::edge_end(bridge, 0)] = at(2);
    models[static_cast<VertexId>(i + 1)].coords[SpecialPoint::edge_end(bridge, 1)] = at(1);
  }
  c.graph = DualGraph(1, vs, es);
  for (long i = 0; i < g; ++i) c.pl.vertex_values[static_cast<VertexId>(i)] = GroupElement{1};
  c.curve.components = models;
  return c;
}

std::vector<CycleKind> top_of_genus(long g) {
  switch (g) {
    case 0: return {};
    case 1: return {CycleKind::TwoGon};
    case 2: return {CycleKind::Loop, CycleKind::TwoGon};
    default: return {CycleKind::Loop, CycleKind::TwoGon, CycleKind::Triangle};
  }
}

// Instances of criterion 10 collect here from the other criteria.
struct Realized {
  DualGraph graph;
  ExplicitCurve curve;
  Mesa mesa;
};
std::vector<Realized> corpus;

void remember(const DualGraph& g, const ExplicitCurve& c, const Mesa& m) {
  corpus.push_back({g, c, m});
}

}  // namespace

int main() {
  bool all = true;

  all &= run_criterion(1, "section values on a line: invertible, nonzero constants", 1.0, 1101,
                       [](Outcome& out) {
    Rng rng(1101);
    for (int i = 0; i < 50; ++i) {
      const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, 5));
      const auto xs = testsupport::distinct_rationals(rng, n + 2);
      std::vector<ProjectivePoint> pts;
      for (const auto& x : xs) pts.push_back(ProjectivePoint::affine(x));
      if (testsupport::coin(rng, 0.3)) pts[uniform(rng, 0, static_cast<long>(n + 1))] = ProjectivePoint::infinity();
      const ProjectivePoint q = pts.back();
      CoordinateDivisor d;
      for (std::size_t k = 0; k <= n; ++k) d[pts[k]] = 1;
      d[q] = -1;
      const SectionBasis b(d);
      out.require(b.dimension() == n + 1, "dimension of sections");
      out.require(oracle::section_dimension(d) == n + 1, "oracle dimension");
      Matrix m(0, b.dimension());
      for (std::size_t k = 0; k <= n; ++k) m.append_row(b.values_at(pts[k]));
      out.require(rank(m) == n + 1, "evaluation matrix invertible");
      const auto model = oracle::polynomial_model(d);
      auto rows = model.conditions;
      for (std::size_t k = 0; k <= n; ++k) rows.push_back(model.value(pts[k]));
      out.require(oracle::bareiss_rank(rows, model.coefficients) -
                          oracle::bareiss_rank(model.conditions, model.coefficients) ==
                      n + 1,
                  "oracle evaluation rank");
      // value_q = sum_k c_k value_{p_k} on every section.
      std::vector<Rational> c;
      out.require(solve(m.transpose(), b.values_at(q), c), "constants solvable");
      for (const auto& ck : c) out.require(ck != 0, "constant at q is nonzero");
    }
    out.note << "50 configurations";
  });

  all &= run_criterion(2, "small genus-1 mesas: h1 = 0 and h0 = m", 5.0, 1102, [](Outcome& out) {
    Rng rng(1102);
    for (int i = 0; i < 30; ++i) {
      testsupport::MesaSpec spec;
      spec.cycles = {i % 2 ? CycleKind::Loop : CycleKind::TwoGon};
      spec.max_tails = 6;
      spec.extra_boundary = 0.0;
      const auto inst = testsupport::random_mesa(rng, spec);
      const auto m = mesa_from(inst.graph, inst.support, inst.top);
      out.require(is_small(inst.graph, m), "instance is small");
      out.require(m.support.size() - m.top.size() <= 6, "at most 6 tail vertices");
      const long count = static_cast<long>(inst.graph.boundary_edges(m.support).size());
      const auto h = cech_h(inst.graph, inst.curve, mesa_bundle(inst.graph, inst.curve, m));
      const auto ref = oracle::mesa_system(inst.graph, inst.curve, m.pl, m.support);
      out.require(h.h1 == 0 && ref.h1 == 0, "h1 = 0");
      out.require(h.h0 == count && ref.h0 == count, "h0 = m");
      remember(inst.graph, inst.curve, m);
    }
    out.note << "30 mesas";
  });

  all &= run_criterion(3, "codim V = genus(E) against the matching-system oracle", 10.0, 1103,
                       [](Outcome& out) {
    Rng rng(1103);
    std::ostringstream counts;
    for (long g = 0; g <= 3; ++g) {
      int done = 0, tries = 0;
      while (done < 8 && tries < 200) {
        ++tries;
        testsupport::MesaSpec spec;
        spec.cycles = top_of_genus(g);
        spec.top_tail = 0.3;
        spec.max_tails = static_cast<std::size_t>(uniform(rng, 1, 6));
        spec.rank = static_cast<std::size_t>(uniform(rng, 1, 2));
        const auto inst = testsupport::random_mesa(rng, spec);
        const auto m = mesa_from(inst.graph, inst.support, inst.top);
        out.require(genus(inst.graph, m.support) == g, "support genus");
        remember(inst.graph, inst.curve, m);
        const auto ref = oracle::mesa_system(inst.graph, inst.curve, m.pl, m.support);
        if (ref.h1 != 0) continue;
        const auto bv = boundary_value_space(inst.graph, inst.curve, m);
        out.require(static_cast<long>(bv.codim) == g, "codim V = genus");
        out.require(ref.codim_v == g, "oracle codim V = genus");
        out.require(static_cast<long>(bv.subspace.rows()) == ref.dim_v, "dim V matches oracle");
        ++done;
      }
      out.require(done >= 5, "at least 5 acyclic instances of genus " + std::to_string(g));
      counts << " g" << g << ":" << done;
    }
    out.note << "instances" << counts.str();
  });

  all &= run_criterion(4, "g = delta - m + 1 and genus preservation", 0, 1104, [](Outcome& out) {
    Rng rng(1104);
    int valid = 0, tries = 0;
    while (valid < 100 && tries < 1000) {
      ++tries;
      std::vector<testsupport::MesaSpec> blocks(static_cast<std::size_t>(uniform(rng, 1, 3)));
      for (auto& b : blocks) {
        b.realize = testsupport::coin(rng);
        const long kind = uniform(rng, 0, 3);
        if (kind == 0) {
          b.smooth_top_genus = uniform(rng, 1, 2);
          b.realize = false;
        } else {
          b.cycles = top_of_genus(kind);
        }
        b.top_tail = 0.2;
      }
      const auto inst = testsupport::random_mesa_curve(rng, blocks);
      const auto d = decompose(inst.graph, inst.pl);
      const ExplicitCurve* geometry = inst.curve.components.empty() ? nullptr : &inst.curve;
      ContractedFiber fiber;
      try {
        fiber = contract_fiber(inst.graph, d, geometry);
      } catch (const Error& e) {
        // Not a valid input: some realized support is not acyclic.
        out.require(e.code() == ErrorCode::NotAcyclic, std::string("unexpected error: ") + e.what());
        continue;
      }
      ++valid;
      long singular = 0;
      for (const auto& s : fiber.singularities) {
        out.require(s.genus == s.delta - s.branches + 1, "g = delta - m + 1");
        out.require(s.genus == genus(inst.graph, s.support), "g = genus of the support");
        singular += s.genus;
      }
      out.require(genus(fiber.graph) + singular == genus(inst.graph), "genus preserved");
    }
    out.require(valid == 100, "100 valid inputs");
    out.note << valid << " valid inputs of " << tries;
  });

  all &= run_criterion(5, "tacnode: functional (c1 a, c2), relation a f'(0) = g'(0)", 0, 0,
                       [](Outcome& out) {
    const auto doc = testsupport::load_example("tacnode.json");
    const auto mesa = decompose(doc.graph, doc.pl).mesas.at(0);
    auto with_unit = [&](const Rational& a) {
      auto curve = *doc.geometry;
      curve.alpha[2] = a;
      return std::make_pair(boundary_value_space(doc.graph, curve, mesa),
                            ring_presentation(doc.graph, mesa, &curve));
    };
    const auto [base, base_ring] = with_unit(1);
    const auto c = gorenstein_constants(base);
    out.require(c.size() == 2, "one functional on two branches");
    out.require(base_ring.jet_relations == std::vector<std::string>{"df_1/dx_1(0) = df_2/dx_2(0)"},
                "a = 1 relation");
    for (long a : {1, 2, 3, -1}) {
      const auto [bv, ring] = with_unit(a);
      out.require(proportional(gorenstein_constants(bv), {c[0] * a, c[1]}),
                  "functional proportional to (c1 a, c2) for a = " + std::to_string(a));
      const std::string expected =
          coefficient_text(Rational(a)) + "df_1/dx_1(0) = df_2/dx_2(0)";
      out.require(ring.jet_relations == std::vector<std::string>{expected},
                  "relation text for a = " + std::to_string(a));
      out.note << "a=" << a << ": " << ring.jet_relations.at(0) << "; ";
    }
  });

  all &= run_criterion(6, "non-Gorenstein point: V = {a1 = 0}, cusp plus smooth branch", 0, 0,
                       [](Outcome& out) {
    const auto doc = testsupport::load_example("non_gorenstein.json");
    const auto mesa = decompose(doc.graph, doc.pl).mesas.at(0);
    const auto bv = boundary_value_space(doc.graph, *doc.geometry, mesa);
    out.require(bv.subspace == Matrix::from_rows({{0, 1}}, 2), "V in RREF");
    out.require(bv.functionals == Matrix::from_rows({{1, 0}}, 2), "annihilator");
    const auto s = describe_mesa(doc.graph, mesa, &*doc.geometry);
    out.require(classify_gorenstein(s) == Ternary::No, "classified not Gorenstein");
    const auto ring = ring_presentation(doc.graph, mesa, &*doc.geometry);
    out.require(ring.value_conditions == std::vector<std::string>{"f_1(0) = f_2(0)"},
                "value condition");
    out.require(ring.jet_relations == std::vector<std::string>{"df_1/dx_1(0) = 0"},
                "cusp jet condition on branch 1 only");
    out.require(ring.shape.find("cusp glued transversally to") != std::string::npos &&
                    ring.shape.find("smooth branch") != std::string::npos,
                "shape names a cusp and a transversal smooth branch");
    out.note << "type: " << ring.shape;
  });

  all &= run_criterion(7, "g transversal cusps: V = 0, all first derivatives vanish", 0, 0,
                       [](Outcome& out) {
    for (long g = 1; g <= 3; ++g) {
      const auto chain = cusp_chain(g);
      const auto d = decompose(chain.graph, chain.pl);
      out.require(d.size() == 1, "one mesa");
      const auto& mesa = d.mesas.at(0);
      out.require(genus(chain.graph, mesa.support) == g, "support genus");
      remember(chain.graph, chain.curve, mesa);
      const auto bv = boundary_value_space(chain.graph, chain.curve, mesa);
      out.require(bv.subspace.rows() == 0 && bv.boundary.size() == static_cast<std::size_t>(g),
                  "V = 0 in Q^g");
      const auto ring = ring_presentation(chain.graph, mesa, &chain.curve);
      for (long i = 1; i <= g; ++i) {
        const std::string rel =
            "df_" + std::to_string(i) + "/dx_" + std::to_string(i) + "(0) = 0";
        bool found = false;
        for (const auto& r : ring.jet_relations) found = found || r == rel;
        out.require(found, rel);
      }
      const std::string shape = g == 1 ? "cusp" : std::to_string(g) + " cusps glued transversally";
      out.require(ring.shape == shape, "shape for g = " + std::to_string(g));
      out.note << "g=" << g << ": " << ring.shape << "; ";
    }
  });

  all &= run_criterion(8, "connecting map is the sum of one-point maps", 0, 1108, [](Outcome& out) {
    Rng rng(1108);
    for (int i = 0; i < 20; ++i) {
      const auto inst = testsupport::random_explicit_curve(
          rng, 1, static_cast<std::size_t>(uniform(rng, 1, 4)), 3);
      const auto all_points = connecting_values(inst.graph, inst.curve, inst.vertices, inst.points);
      out.require(all_points.rows() == 1, "H^1 of a genus-1 curve is one-dimensional");
      for (std::size_t j = 0; j < inst.points.size(); ++j) {
        const auto one = connecting_value(inst.graph, inst.curve, inst.vertices, inst.points[j]);
        for (std::size_t r = 0; r < all_points.rows(); ++r)
          out.require(all_points(r, j) == one.at(r), "column equals one-point map");
      }
    }
    out.note << "20 curves";
  });

  all &= run_criterion(9, "family strata, functoriality and radius coherence", 10.0, 1109,
                       [](Outcome& out) {
    Rng rng(1109);
    int simple = 0;
    for (int i = 0; i < 30; ++i) {
      const std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 4));
      const auto fam = testsupport::random_family(rng, r, 2);
      const auto report = validate_mesa_family(fam, AcyclicityMode::Guaranteed);
      out.require(report.pass && report.strata.size() == (std::size_t{1} << r), "all strata pass");
      for (const auto& s : report.strata) {
        for (const auto& t : all_faces(r - s.face.killed.size())) {
          const auto twice = specialize(s, t);
          const auto once = specialize(fam, compose_faces(s.face, t, r));
          out.require(twice.graph == once.graph && twice.pl.normalized() == once.pl.normalized() &&
                          twice.radii() == once.radii(),
                      "specialization is functorial");
        }
      }
      if (!is_simple(report)) continue;
      ++simple;
      const auto radius = global_radius(report);
      for (const auto& s : report.strata) {
        const auto expected = face_quotient(radius.generic, s.face);
        const auto radii = s.radii();
        const auto actual =
            radii.empty() ? MonoidElement(std::vector<Integer>(expected.rank(), Integer(0))) : radii[0];
        out.require(expected == actual, "face_quotient(rho, S) = rho_S");
      }
    }
    out.note << "30 families, " << simple << " simple";
  });

  all &= run_criterion(10, "generic 'yes' never contradicts exact h1", 0, 1110, [](Outcome& out) {
    Rng rng(1110);
    for (int i = 0; i < 300; ++i) {
      testsupport::MesaSpec spec;
      spec.cycles = top_of_genus(uniform(rng, 0, 3));
      if (testsupport::coin(rng, 0.3)) spec.cycles.push_back(CycleKind::Loop);
      spec.top_tail = 0.3;
      spec.max_tails = static_cast<std::size_t>(uniform(rng, 1, 6));
      const auto inst = testsupport::random_mesa(rng, spec);
      remember(inst.graph, inst.curve, mesa_from(inst.graph, inst.support, inst.top));
    }
    for (const char* name : {"tacnode.json", "non_gorenstein.json", "two_cusps.json", "cusp.json"}) {
      const auto doc = testsupport::load_example(name);
      for (const auto& m : decompose(doc.graph, doc.pl).mesas) remember(doc.graph, *doc.geometry, m);
    }
    int yes = 0, zero = 0;
    for (const auto& item : corpus) {
      const long h1 =
          cech_h(item.graph, item.curve, mesa_bundle(item.graph, item.curve, item.mesa)).h1;
      if (h1 == 0) ++zero;
      for (auto mode : {AcyclicityMode::Guaranteed, AcyclicityMode::Generic}) {
        if (generic_acyclicity(item.graph, item.mesa, mode).value != Acyclicity::Yes) continue;
        ++yes;
        out.require(h1 == 0, "generic yes with exact h1 > 0");
      }
    }
    out.note << corpus.size() << " realized mesas, " << yes << " yes verdicts, " << zero
             << " exactly acyclic";
  });

  return all ? 0 : 1;
}
