#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "mesacurve/errors.hpp"
#include "mesacurve/pl_mesa.hpp"

using namespace mesacurve;
using testsupport::Rng;
using testsupport::uniform;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvariantBreach;
}

PLFunction values(std::map<VertexId, GroupElement> v) {
  PLFunction pl;
  pl.vertex_values = std::move(v);
  return pl;
}

// Genus-1 vertex 0 with two rational tails 1, 2 joined by edges of length delta.
DualGraph elliptic_two_tails() {
  return DualGraph(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}},
                   {{0, 0, 1, MonoidElement{1}}, {1, 0, 2, MonoidElement{1}}});
}

// Genus-3 curve: elliptic top c=0, rational a=1, b=2 in the support, rational
// x=3 outside reached from both a and b, elliptic y=4 outside attached to c.
DualGraph genus_three_example() {
  return DualGraph(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}, {3, 0, {}}, {4, 1, {}}},
                   {{0, 0, 1, MonoidElement{1}},
                    {1, 0, 2, MonoidElement{1}},
                    {2, 1, 3, MonoidElement{1}},
                    {3, 2, 3, MonoidElement{1}},
                    {4, 0, 4, MonoidElement{2}}});
}

}  // namespace

TEST_CASE("validate_pl examples") {
  const DualGraph g(2, {{0, 0, {}}, {1, 0, {}}}, {{0, 0, 1, MonoidElement{1, 0}}});
  CHECK(validate_pl(g, values({{0, {5, 5}}, {1, {5, 5}}})).ok());
  CHECK(validate_pl(g, values({{0, {2, 0}}})).ok());
  const auto bad = validate_pl(g, values({{0, {1, 1}}}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.violations.front().edge == 0);

  const DualGraph frozen(1, {{0, 0, {}}, {1, 0, {}}}, {{0, 0, 1, MonoidElement{0}}});
  CHECK(validate_pl(frozen, values({{0, {3}}, {1, {3}}})).ok());
  CHECK_FALSE(validate_pl(frozen, values({{0, {3}}})).ok());
  CHECK_THROWS_AS(validate_pl(g, values({{9, {1, 0}}})), Error);
}

TEST_CASE("mesa_from on a genus-1 vertex with tails") {
  const auto g = elliptic_two_tails();
  const auto m = mesa_from(g, {0}, {0});
  CHECK(m.radius == MonoidElement{1});
  CHECK(m.pl.value(0, 1) == GroupElement{1});
  CHECK(m.pl.value(1, 1).is_zero());
  CHECK(validate_pl(g, m.pl).ok());
}

TEST_CASE("mesa_from rejects malformed supports with distinct codes") {
  const DualGraph uneven(2, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}},
                         {{0, 0, 1, MonoidElement{1, 0}}, {1, 0, 2, MonoidElement{0, 1}}});
  CHECK(code_of([&] { mesa_from(uneven, {0}, {0}); }) == ErrorCode::UnequalBoundaryLengths);

  // Rational vertex 1 hangs off the top with no way out.
  const DualGraph dead(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}},
                       {{0, 0, 1, MonoidElement{1}}, {1, 0, 2, MonoidElement{1}}});
  CHECK(code_of([&] { mesa_from(dead, {0, 1}, {0}); }) == ErrorCode::DeadEndComponent);

  const auto g = elliptic_two_tails();
  CHECK(code_of([&] { mesa_from(g, {0, 1, 2}, {0}); }) == ErrorCode::NoOutsideComponent);

  const DualGraph cyc(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}, {3, 0, {}}},
                      {{0, 0, 1, MonoidElement{1}}, {1, 1, 2, MonoidElement{1}},
                       {2, 1, 2, MonoidElement{1}}, {3, 2, 3, MonoidElement{1}}});
  CHECK(code_of([&] { mesa_from(cyc, {0, 1, 2}, {0}); }) == ErrorCode::NotATree);
}

TEST_CASE("support_top_radius reads mesa candidates") {
  const auto g = elliptic_two_tails();
  CHECK(support_top_radius(g, PLFunction::zero()).empty());
  const auto c = support_top_radius(g, values({{0, {1}}}));
  REQUIRE(c.size() == 1);
  CHECK(c[0] == MesaCandidate{{0}, {0}, MonoidElement{1}});

  const DualGraph two(1, {{0, 1, {}}, {1, 0, {}}, {2, 1, {}}},
                      {{0, 0, 1, MonoidElement{1}}, {1, 1, 2, MonoidElement{1}}});
  CHECK(support_top_radius(two, values({{0, {1}}, {2, {1}}})).size() == 2);

  const DualGraph incomparable(2, {{0, 0, {}}, {1, 0, {}}, {2, 0, {}}},
                               {{0, 0, 1, MonoidElement{1, 0}}, {1, 1, 2, MonoidElement{1, 1}}});
  CHECK(code_of([&] { support_top_radius(incomparable, values({{0, {1, 0}}, {1, {0, 1}}})); }) ==
        ErrorCode::NoUniqueMaximum);
}

TEST_CASE("decompose examples") {
  const auto g = elliptic_two_tails();
  CHECK(decompose(g, PLFunction::zero()).size() == 0);

  const auto d = decompose(g, values({{0, {1}}}));
  REQUIRE(d.size() == 1);
  CHECK(d.mesas[0].support == VertexSet{0});
  CHECK(d.acyclicity[0] == Acyclicity::NotEvaluated);

  CHECK_THROWS_AS(decompose(g, values({{0, {2}}})), MesaShapeError);
  try {
    decompose(g, values({{0, {2}}}));
  } catch (const MesaShapeError& e) {
    REQUIRE(e.failures().size() == 1);
    CHECK(e.failures()[0].support == VertexSet{0});
  }
}

TEST_CASE("decompose the genus-3 example: two equal paths to the outside vertex") {
  const auto g = genus_three_example();
  CHECK(genus(g) == 3);
  const auto d = decompose(g, values({{0, {2}}, {1, {1}}, {2, {1}}}));
  REQUIRE(d.size() == 1);
  const auto& m = d.mesas[0];
  CHECK(m.support == VertexSet{0, 1, 2});
  CHECK(m.top == VertexSet{0});
  CHECK(m.radius == MonoidElement{2});
  const VertexSet E{0, 1, 2};
  const VertexSet F{0};
  CHECK(path_length(g, unique_path_from_top(g, E, F, 1)) + MonoidElement{1} == m.radius);
  CHECK(path_length(g, unique_path_from_top(g, E, F, 2)) + MonoidElement{1} == m.radius);
  CHECK(is_small(g, m));
}

TEST_CASE("is_small examples") {
  const DualGraph leaf(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}},
                       {{0, 0, 1, MonoidElement{1}}, {1, 1, 2, MonoidElement{1}}});
  CHECK(is_small(leaf, mesa_from(leaf, {0}, {0})));
  CHECK_FALSE(is_small(leaf, mesa_from(leaf, {0, 1}, {0, 1})));
  CHECK(is_small(leaf, mesa_from(leaf, {0, 1}, {0})));
  const DualGraph rational(1, {{0, 0, {}}, {1, 0, {}}}, {{0, 0, 1, MonoidElement{1}}});
  CHECK(code_of([&] { is_small(rational, mesa_from(rational, {0}, {0})); }) ==
        ErrorCode::GenusZeroCore);
}

TEST_CASE("decompose recovers randomly generated mesas") {
  Rng rng(301);
  for (int i = 0; i < 150; ++i) {
    std::vector<testsupport::MesaSpec> blocks(static_cast<std::size_t>(uniform(rng, 1, 3)));
    const std::size_t rank = static_cast<std::size_t>(uniform(rng, 1, 3));
    for (auto& b : blocks) {
      b.rank = rank;
      b.realize = false;
      switch (uniform(rng, 0, 3)) {
        case 0: b.smooth_top_genus = uniform(rng, 1, 2); break;
        case 1: b.cycles = {testsupport::CycleKind::Loop}; break;
        case 2: b.cycles = {testsupport::CycleKind::TwoGon, testsupport::CycleKind::Triangle}; break;
        default: break;
      }
      b.top_tail = 0.3;
    }
    const auto inst = testsupport::random_mesa_curve(rng, blocks);
    REQUIRE(validate_pl(inst.graph, inst.pl).ok());
    const auto d = decompose(inst.graph, inst.pl);
    REQUIRE(d.size() == blocks.size());
    PLFunction sum;
    for (const auto& m : d.mesas) {
      const auto again = mesa_from(inst.graph, m.support, m.top);
      CHECK(again.radius == m.radius);
      CHECK(validate_pl(inst.graph, again.pl).ok());
      sum = sum.plus(again.pl, inst.graph.rank());
      // Every edge leaving the support has slope exactly one.
      for (auto eid : inst.graph.boundary_edges(m.support)) {
        const auto& e = inst.graph.edge(eid);
        const VertexId in = m.support.count(e.v) ? e.v : e.w;
        CHECK(m.pl.value(in, inst.graph.rank()) == e.delta.to_group());
      }
    }
    CHECK(sum.normalized() == inst.pl.normalized());
    bool found = false;
    for (const auto& m : d.mesas) found = found || (m.support == inst.support && m.top == inst.top);
    CHECK(found);
  }
}
