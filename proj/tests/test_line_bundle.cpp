#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "mesacurve/line_bundle.hpp"

using namespace mesacurve;
using testsupport::Rng;
using testsupport::uniform;

namespace {

PLFunction values(std::map<VertexId, GroupElement> v) {
  PLFunction pl;
  pl.vertex_values = std::move(v);
  return pl;
}

SpecialPoint e(EdgeId id, int end) { return SpecialPoint::edge_end(id, end); }

}  // namespace

TEST_CASE("outgoing slopes of minus lambda on an elliptic top") {
  const DualGraph g(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}},
                    {{0, 0, 1, MonoidElement{1}}, {1, 0, 2, MonoidElement{1}}});
  const auto minus = values({{0, {1}}}).negated();
  CHECK(outgoing_slope(g, minus, 0, e(0, 0)) == 1);
  CHECK(outgoing_slope(g, minus, 0, e(1, 0)) == 1);
  CHECK(outgoing_slope(g, minus, 1, e(0, 1)) == -1);
  CHECK(outgoing_slope(g, PLFunction::zero(), 0, e(0, 0)) == 0);
}

TEST_CASE("marking slopes count towards the degree") {
  const DualGraph g(1, {{0, 0, {7}}, {1, 0, {}}}, {{0, 0, 1, MonoidElement{1}}});
  PLFunction pl;
  pl.marking_slopes[7] = 3;
  CHECK(outgoing_slope(g, pl, 0, SpecialPoint::marking(7)) == 3);
  const auto md = multidegree(g, pl);
  CHECK(md.degree.at(0) == 3);
  CHECK(md.total == 3);
}

TEST_CASE("multidegree examples") {
  const DualGraph g(1, {{0, 0, {}}, {1, 0, {}}, {2, 0, {}}, {3, 0, {}}},
                    {{0, 0, 1, MonoidElement{1}}, {1, 0, 1, MonoidElement{2}},
                     {2, 0, 2, MonoidElement{1}}, {3, 1, 3, MonoidElement{1}}});
  const auto zero = multidegree(g, PLFunction::zero());
  for (const auto& [v, d] : zero.degree) CHECK(d == 0);

  // 2-gon core {0, 1} with tails 2 and 3.
  const auto md = multidegree(g, values({{0, {1}}, {1, {1}}}).negated());
  CHECK(md.degree.at(0) == 1);
  CHECK(md.degree.at(1) == 1);
  CHECK(md.degree.at(2) == -1);
  CHECK(md.degree.at(3) == -1);
  CHECK(md.total == 0);
}

TEST_CASE("degrees on the genus-3 example") {
  const DualGraph g(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}, {3, 0, {}}, {4, 1, {}}},
                    {{0, 0, 1, MonoidElement{1}}, {1, 0, 2, MonoidElement{1}},
                     {2, 1, 3, MonoidElement{1}}, {3, 2, 3, MonoidElement{1}},
                     {4, 0, 4, MonoidElement{2}}});
  const auto md = multidegree(g, values({{0, {2}}, {1, {1}}, {2, {1}}}).negated());
  CHECK(md.degree.at(0) == 3);
  CHECK(md.degree.at(1) == 0);
  CHECK(md.degree.at(2) == 0);
  CHECK(md.degree.at(3) == -2);
  CHECK(md.degree.at(4) == -1);
}

TEST_CASE("loops contribute nothing") {
  const DualGraph g(1, {{0, 0, {}}, {1, 0, {}}},
                    {{0, 0, 0, MonoidElement{1}}, {1, 0, 1, MonoidElement{1}}});
  const auto md = multidegree(g, values({{0, {1}}}).negated());
  CHECK(md.degree.at(0) == 1);
  CHECK(md.loop_incident == VertexSet{0});
}

TEST_CASE("restriction shapes of a mesa") {
  // Top 0 (genus 1), tail 1 with one child edge to outside 2; top also meets 3.
  const DualGraph g(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}, {3, 0, {}}},
                    {{0, 0, 1, MonoidElement{1}}, {1, 1, 2, MonoidElement{1}},
                     {2, 0, 3, MonoidElement{2}}});
  const auto m = mesa_from(g, {0, 1}, {0});
  const auto shapes = mesa_restriction_shapes(g, m);
  REQUIRE(shapes.size() == 2);
  for (const auto& s : shapes) {
    if (s.component == 0) {
      CHECK(s.role == RestrictionShape::Role::Top);
      CHECK(s.divisor == PointDivisor{{e(0, 0), 1}, {e(2, 0), 1}});
    } else {
      CHECK(s.role == RestrictionShape::Role::Tail);
      CHECK(s.divisor == PointDivisor{{e(0, 1), -1}, {e(1, 0), 1}});
    }
  }

  const DualGraph flat(1, {{0, 1, {}}, {1, 0, {}}, {2, 0, {}}},
                       {{0, 0, 1, MonoidElement{1}}, {1, 0, 2, MonoidElement{1}}});
  const auto only_top = mesa_restriction_shapes(flat, mesa_from(flat, {0}, {0}));
  REQUIRE(only_top.size() == 1);
  CHECK(degree(only_top[0].divisor) == 2);
}

TEST_CASE("total degree equals the sum of marking slopes; multidegree is additive") {
  Rng rng(401);
  for (int i = 0; i < 100; ++i) {
    testsupport::MesaSpec spec;
    spec.rank = static_cast<std::size_t>(uniform(rng, 1, 3));
    spec.cycles = {testsupport::CycleKind::TwoGon};
    spec.realize = false;
    auto a = testsupport::random_mesa(rng, spec);
    const auto& g = a.graph;
    // A second PL function: a multiple of the mesa, plus a constant shift.
    PLFunction shift;
    for (const auto& v : g.vertices()) {
      shift.vertex_values[v.id] = GroupElement(std::vector<Integer>(g.rank(), 4));
    }
    const long k = uniform(rng, -3, 3);
    PLFunction scaled;
    for (const auto& [v, x] : a.pl.vertex_values) scaled.vertex_values[v] = x.scaled(k);
    const auto sum = a.pl.plus(scaled, g.rank()).plus(shift, g.rank());
    REQUIRE(validate_pl(g, sum).ok());
    const auto m1 = multidegree(g, a.pl);
    const auto m2 = multidegree(g, scaled);
    const auto m3 = multidegree(g, sum);
    CHECK(m1.total == 0);
    for (const auto& v : g.vertices()) {
      CHECK(m3.degree.at(v.id) == m1.degree.at(v.id) + m2.degree.at(v.id));
    }
    // Every top vertex of O(-lambda) has degree = edges leaving the top there.
    const auto minus = multidegree(g, a.pl.negated());
    for (auto v : a.top) {
      long leaving = 0;
      for (auto eid : g.incident_edges(v)) {
        const auto& ed = g.edge(eid);
        if (!ed.is_loop() && !a.top.count(ed.other(v))) ++leaving;
      }
      CHECK(minus.degree.at(v) == leaving);
    }
  }
}
