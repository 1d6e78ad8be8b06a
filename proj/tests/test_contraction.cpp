#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "mesacurve/contraction.hpp"
#include "mesacurve/errors.hpp"

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

Matrix rows(std::vector<std::vector<Rational>> r, std::size_t cols) {
  return Matrix::from_rows(r, cols);
}

// Random ring element whose branch parts stop at degree 2.
BbarElement low_degree_element(Rng& rng, const TruncatedRing& ring) {
  BbarElement u = ring.zero();
  u.constant = testsupport::random_rational(rng);
  const auto& v = ring.subspace();
  for (std::size_t r = 0; r < v.rows(); ++r) {
    const Rational c = testsupport::random_rational(rng);
    for (std::size_t i = 0; i < ring.branches(); ++i) u.branches[i][0] += c * v(r, i);
  }
  for (auto& b : u.branches) b[1] = testsupport::random_rational(rng);
  return u;
}

}  // namespace

TEST_CASE("genus of a singularity from delta and branches") {
  CHECK(genus_of_singularity(1, 1) == 1);
  CHECK(genus_of_singularity(2, 2) == 1);
  CHECK(genus_of_singularity(1, 2) == 0);
  CHECK(genus_of_singularity(0, 1) == 0);
  CHECK(genus_of_singularity(5, 3) == 3);
  CHECK(code_of([] { genus_of_singularity(0, 2); }) == ErrorCode::InvalidSingularity);
  CHECK(code_of([] { genus_of_singularity(-1, 1); }) == ErrorCode::InvalidSingularity);
  CHECK(code_of([] { genus_of_singularity(3, 0); }) == ErrorCode::InvalidSingularity);
}

TEST_CASE("singularity types from the annihilator") {
  CHECK(describe_singularity(Matrix(0, 1), 1) == "smooth point");
  CHECK(describe_singularity(Matrix(0, 2), 2) == "node");
  CHECK(describe_singularity(Matrix(0, 3), 3) == "ordinary 3-fold point");
  CHECK(describe_singularity(rows({{1}}, 1), 1) == "cusp");
  CHECK(describe_singularity(rows({{1, 2}}, 2), 2) == "tacnode");
  CHECK(describe_singularity(rows({{1, -1, 3}}, 3), 3) == "elliptic 3-fold point");
  CHECK(describe_singularity(rows({{1, 0}}, 2), 2) ==
        "a cusp glued transversally to a smooth branch");
  CHECK(describe_singularity(rows({{1, 0}, {0, 1}}, 2), 2) == "2 cusps glued transversally");
  CHECK(describe_singularity(rows({{1, 0, 0}, {0, 1, 0}}, 3), 3) ==
        "2 cusps glued transversally to a smooth branch");
  CHECK(describe_singularity(rows({{1, 0, 0}, {0, 1, 1}}, 3), 3) ==
        "a cusp glued transversally to a tacnode");
}

TEST_CASE("Gorenstein test on functionals") {
  CHECK(is_elliptic_gorenstein(rows({{1, 2}}, 2)));
  CHECK(is_elliptic_gorenstein(rows({{1}}, 1)));
  CHECK_FALSE(is_elliptic_gorenstein(rows({{1, 0}}, 2)));
  CHECK_FALSE(is_elliptic_gorenstein(rows({{1, 0}, {0, 1}}, 2)));
  CHECK_FALSE(is_elliptic_gorenstein(Matrix(0, 2)));
}

TEST_CASE("jet relation rendering") {
  CHECK(jet_relation({1, 0}) == "df_1/dx_1(0) = 0");
  CHECK(jet_relation({0, 3}) == "df_2/dx_2(0) = 0");
  CHECK(jet_relation({1, -1}) == "df_1/dx_1(0) = df_2/dx_2(0)");
  CHECK(jet_relation({2, -1}) == "2*df_1/dx_1(0) = df_2/dx_2(0)");
  CHECK(jet_relation({1, 1}) == "-df_1/dx_1(0) = df_2/dx_2(0)");
  CHECK(jet_relation({Rational(1, 2), -1}) == "1/2*df_1/dx_1(0) = df_2/dx_2(0)");
  CHECK(jet_relation({1, -2, 3}) ==
        "df_1/dx_1(0) - 2*df_2/dx_2(0) + 3*df_3/dx_3(0) = 0");
  CHECK(jet_relation({0, 0}) == "0 = 0");
}

TEST_CASE("contracting the tacnode example") {
  const auto doc = testsupport::load_example("tacnode.json");
  const auto d = decompose(doc.graph, doc.pl);
  const auto fiber = contract_fiber(doc.graph, d, &*doc.geometry);
  REQUIRE(fiber.singularities.size() == 1);
  const auto& s = fiber.singularities[0];
  CHECK(s.genus == 1);
  CHECK(s.branches == 2);
  CHECK(s.delta == 2);
  CHECK(s.elliptic_gorenstein == Ternary::Yes);
  CHECK(classify_gorenstein(s) == Ternary::Yes);
  CHECK(s.shape == "tacnode");
  CHECK(s.point == 0);
  CHECK(genus(fiber.graph) + s.genus == genus(doc.graph));
  CHECK(fiber.vertex_map.at(1) == s.point);

  const auto ring = ring_presentation(doc.graph, d.mesas[0], &*doc.geometry);
  CHECK(ring.value_conditions == std::vector<std::string>{"f_1(0) = f_2(0)"});
  CHECK(ring.jet_relations == std::vector<std::string>{"2*df_1/dx_1(0) = df_2/dx_2(0)"});
  CHECK(ring.codim() == 1);
  CHECK(ring.to_text().find("type: tacnode") != std::string::npos);
  CHECK(code_of([&] { ring_presentation(doc.graph, d.mesas[0], nullptr); }) ==
        ErrorCode::MissingGeometry);

  const auto tr = TruncatedRing::from(*s.values, 6);
  CHECK(tr.delta() == 2);
}

TEST_CASE("classification needs genus one and boundary values") {
  SingularityDescriptor d;
  d.genus = 2;
  CHECK(code_of([&] { classify_gorenstein(d); }) == ErrorCode::NotApplicable);
  d.genus = 1;
  CHECK(code_of([&] { classify_gorenstein(d); }) == ErrorCode::NotApplicable);
}

TEST_CASE("unrealized small genus-1 mesas") {
  const auto doc = testsupport::load_example("elliptic_two_tails.json");
  const auto d = decompose(doc.graph, doc.pl);
  REQUIRE(d.size() == 1);
  const auto s = describe_mesa(doc.graph, d.mesas[0], nullptr);
  CHECK(s.genus == 1);
  CHECK(s.branches == 2);
  CHECK(s.delta == 2);
  CHECK_FALSE(s.values.has_value());
  CHECK(s.elliptic_gorenstein == Ternary::Yes);
  CHECK(s.shape == "tacnode");
}

TEST_CASE("truncated ring delta equals branches minus one plus codim") {
  CHECK(TruncatedRing(Matrix(0, 1), 1, 4).delta() == 1);
  CHECK(TruncatedRing(Matrix::identity(2), 2, 4).delta() == 1);
  CHECK(TruncatedRing(Matrix::identity(3), 3, 3).delta() == 2);
  CHECK(TruncatedRing(rows({{1, 1}}, 2), 2, 5).delta() == 2);
  CHECK(TruncatedRing(Matrix(0, 2), 2, 5).delta() == 3);
  CHECK_THROWS_AS(TruncatedRing(Matrix(0, 2), 2, 0), Error);
}

TEST_CASE("truncated ring multiplication is a commutative associative product") {
  Rng rng(801);
  const std::vector<Matrix> spaces = {rows({{1, 2}}, 2), rows({{0, 1}}, 2), Matrix(0, 1),
                                      rows({{1, 0, -1}, {0, 1, 3}}, 3), Matrix::identity(2)};
  for (const auto& v : spaces) {
    const TruncatedRing ring(v, v.cols(), 6);
    for (int i = 0; i < 20; ++i) {
      const auto a = low_degree_element(rng, ring);
      const auto b = low_degree_element(rng, ring);
      const auto c = low_degree_element(rng, ring);
      REQUIRE(ring.contains(a));
      const auto ab = ring.multiply(a, b);
      CHECK(ab == ring.multiply(b, a));
      CHECK(ring.contains(ab));
      CHECK(ring.multiply(ab, c) == ring.multiply(a, ring.multiply(b, c)));
      CHECK(ring.multiply(a, ring.add(b, c)) == ring.add(ab, ring.multiply(a, c)));
      CHECK(ring.multiply(ring.one(), a) == a);
      CHECK(ring.multiply(ring.scale(2, a), b) == ring.scale(2, ab));
      CHECK(bbar_multiply(ring, a, b) == ab);
    }
  }
}

TEST_CASE("truncated ring errors") {
  const TruncatedRing ring(rows({{1, 2}}, 2), 2, 2);
  auto outside = ring.zero();
  outside.branches[0][0] = 1;
  CHECK_FALSE(ring.contains(outside));
  CHECK(code_of([&] { ring.multiply(outside, ring.one()); }) == ErrorCode::NotInRing);

  auto high = ring.zero();
  high.branches[0][1] = 1;
  CHECK(code_of([&] { ring.multiply(high, high); }) == ErrorCode::TruncationExceeded);

  BbarElement wrong;
  wrong.branches = {{1}};
  CHECK(code_of([&] { ring.contains(wrong); }) == ErrorCode::NotInRing);
}

TEST_CASE("contraction keeps the genus and the delta formula on random curves") {
  Rng rng(802);
  for (int i = 0; i < 100; ++i) {
    std::vector<testsupport::MesaSpec> blocks(static_cast<std::size_t>(uniform(rng, 1, 3)));
    for (auto& b : blocks) {
      b.realize = testsupport::coin(rng);
      switch (uniform(rng, 0, 3)) {
        case 0: b.smooth_top_genus = uniform(rng, 1, 2); b.realize = false; break;
        case 1: b.cycles = {testsupport::CycleKind::Loop}; break;
        case 2: b.cycles = {testsupport::CycleKind::TwoGon, testsupport::CycleKind::Loop}; break;
        default: b.cycles = {testsupport::CycleKind::Triangle}; break;
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
      // Realized supports that are not acyclic have no boundary value space.
      CHECK(e.code() == ErrorCode::NotAcyclic);
      continue;
    }
    long singular = 0;
    for (const auto& s : fiber.singularities) {
      CHECK(s.genus == s.delta - s.branches + 1);
      CHECK(s.genus == genus(inst.graph, s.support));
      CHECK(fiber.graph.vertex(s.point).genus == 0);
      singular += s.genus;
    }
    CHECK(genus(fiber.graph) + singular == genus(inst.graph));
  }
}
