/**
 * Contraction of mesa supports to singular points.
 *
 * Each support E collapses to a vertex of genus 0 standing for the singular
 * point; the boundary edges become its branches. The singularity itself
 * carries genus g = genus(E), m branches and delta invariant
 * delta = g + m - 1. When E is realized explicitly the local ring is
 *
 *   { f on the branches : f_1(0) = ... = f_m(0),
 *     (df_1/dx_1(0), ..., df_m/dx_m(0)) in V },
 *
 * with x_i the affine coordinate of the outside branch, centred at the
 * attachment point.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mesacurve/cohomology.hpp"
#include "mesacurve/pl_mesa.hpp"

namespace mesacurve {

enum class Ternary { Yes, No, Unknown };
const char* to_string(Ternary t);

/// delta - m + 1; InvalidSingularity when negative or m < 1.
long genus_of_singularity(long delta, long m);

struct BranchData {
  EdgeId edge = 0;
  VertexId outside = 0;
  /// Branch point on the outside component.
  SpecialPoint point;
  /// Its coordinate when the outside component is realized.
  std::optional<ProjectivePoint> coordinate;
};

struct SingularityDescriptor {
  /// Id of the vertex standing for the singular point after contraction.
  VertexId point = 0;
  VertexSet support;
  long genus = 0;
  long branches = 0;
  long delta = 0;
  std::vector<BranchData> branch_data;
  /// Present when the support is realized explicitly.
  std::optional<BoundaryValues> values;
  /// Defining functional of V when codim V = 1.
  std::vector<Rational> constants;
  Ternary elliptic_gorenstein = Ternary::Unknown;
  std::string shape;
};

/**
 * Gorenstein test for genus-1 points: V must have codimension 1 and its
 * defining functional no zero coefficient. NotApplicable when genus != 1 or
 * V is unavailable.
 */
Ternary classify_gorenstein(const SingularityDescriptor& d);

/// Same test on a bare annihilator basis.
bool is_elliptic_gorenstein(const Matrix& functionals);

/// Plain-language type of the point read off from the annihilator of V.
std::string describe_singularity(const Matrix& functionals, std::size_t m);

SingularityDescriptor describe_mesa(const DualGraph& g, const Mesa& m,
                                    const ExplicitCurve* geometry);

struct ContractedFiber {
  DualGraph graph;
  /// Old vertex id to new vertex id.
  std::map<VertexId, VertexId> vertex_map;
  std::vector<SingularityDescriptor> singularities;
};

/**
 * Collapses every support of the decomposition. Checks
 * genus(g) = genus(contracted) + sum of singularity genera and
 * g = delta - m + 1 for every descriptor (InvariantBreach otherwise).
 */
ContractedFiber contract_fiber(const DualGraph& g, const MesaDecomposition& d,
                               const ExplicitCurve* geometry);

struct RingPresentation {
  std::size_t branches = 0;
  /// "f_1(0) = f_2(0)", ...
  std::vector<std::string> value_conditions;
  /// Annihilator of V' (RREF), one row per jet condition.
  Matrix jet_conditions;
  /// One line per row of jet_conditions.
  std::vector<std::string> jet_relations;
  std::string shape;

  std::size_t codim() const { return jet_conditions.rows(); }
  std::string to_text() const;
};

RingPresentation ring_presentation(const BoundaryValues& bv);
/// MissingGeometry when the support is not realized.
RingPresentation ring_presentation(const DualGraph& g, const Mesa& m,
                                   const ExplicitCurve* geometry);

/// Rendering of one jet condition c.a = 0 in branch derivative notation.
std::string jet_relation(const std::vector<Rational>& c);

/**
 * Element (f, c) of the truncated ring: f_i = sum_{d=1..N} f_{i,d} x_i^d on
 * each branch, c the common value at the point.
 */
struct BbarElement {
  std::vector<std::vector<Rational>> branches;
  Rational constant;

  bool operator==(const BbarElement&) const = default;
};

/**
 * The ring truncated at branch degree N: poles of the outside sections are
 * allowed only at the point at infinity of each branch coordinate, with
 * order at most N.
 */
class TruncatedRing {
 public:
  TruncatedRing(Matrix subspace, std::size_t m, std::size_t truncation);
  static TruncatedRing from(const BoundaryValues& bv, std::size_t truncation);

  std::size_t branches() const { return m_; }
  std::size_t truncation() const { return n_; }
  const Matrix& subspace() const { return subspace_; }

  BbarElement zero() const;
  BbarElement one() const;
  /// Linear terms (df_i/dx_i(0))_i.
  std::vector<Rational> linear_terms(const BbarElement& u) const;
  bool contains(const BbarElement& u) const;

  BbarElement add(const BbarElement& u, const BbarElement& v) const;
  BbarElement scale(const Rational& a, const BbarElement& u) const;
  /// (f, c)(f', c') = (ff' + fc' + f'c, cc'); TruncationExceeded past degree N,
  /// NotInRing for inputs outside the ring.
  BbarElement multiply(const BbarElement& u, const BbarElement& v) const;

  /// A basis of the truncated ring.
  std::vector<BbarElement> basis() const;
  /// dim(branch polynomials of degree <= N) - dim(ring), computed by rank.
  std::size_t delta() const;

 private:
  void check_shape(const BbarElement& u) const;
  std::vector<Rational> flatten(const BbarElement& u) const;

  Matrix subspace_;
  Matrix functionals_;
  std::size_t m_;
  std::size_t n_;
};

/// Interface name for TruncatedRing::multiply.
BbarElement bbar_multiply(const TruncatedRing& ring, const BbarElement& u,
                          const BbarElement& v);

}  // namespace mesacurve
