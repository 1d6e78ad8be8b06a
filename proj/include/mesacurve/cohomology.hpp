/**
 * Exact section spaces and cohomology of line bundles on explicit curves.
 *
 * On a component P^1 with divisor D = sum n_q q, L(D) has the basis
 *   f_k = x^k / prod_{q finite} (x - q)^{n_q},   k = 0 .. deg D.
 * A section is evaluated at p in the trivialization "multiply by (x-p)^n,
 * then set x = p" where n = mult_p(D); at infinity the chart t = 1/x is used.
 *
 * Global sections are the kernel of the node-matching system
 *   sigma_lo(p) - alpha_e * sigma_hi(p') = 0
 * over the edges inside the support, and h^1 follows from the normalization
 * sequence.
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "mesacurve/geometry.hpp"
#include "mesacurve/line_bundle.hpp"
#include "mesacurve/linalg.hpp"
#include "mesacurve/pl_mesa.hpp"

namespace mesacurve {

/// Divisor on one P^1, keyed by coordinate.
using CoordinateDivisor = std::map<ProjectivePoint, long>;

long degree(const CoordinateDivisor& d);

/// The basis f_0 .. f_{deg D} of L(D) on a single P^1.
class SectionBasis {
 public:
  SectionBasis() = default;
  explicit SectionBasis(CoordinateDivisor d);

  const CoordinateDivisor& divisor() const { return divisor_; }
  /// max(0, deg D + 1).
  std::size_t dimension() const { return dimension_; }

  /// Value of f_k at p in the trivialization of O(D) at p.
  Rational value(std::size_t k, const ProjectivePoint& p) const;
  /// (f_0(p), ..., f_{dim-1}(p)).
  std::vector<Rational> values_at(const ProjectivePoint& p) const;
  /// Human-readable form of f_k, e.g. "x^2/((x)(x-1))".
  std::string describe(std::size_t k) const;

 private:
  CoordinateDivisor divisor_;
  std::size_t dimension_ = 0;
};

SectionBasis riemann_section_space(const CoordinateDivisor& d);

/// Line bundle data on a realized subcurve.
struct ExplicitBundle {
  VertexSet support;
  /// Divisor per component, on declared points; missing means 0.
  std::map<VertexId, PointDivisor> divisor;
  /// Per-edge gluing scalars overriding the curve's units.
  std::map<EdgeId, Rational> gluing;
};

ExplicitBundle trivial_bundle(const VertexSet& support);

/// Coordinates of each special point of the divisor on v.
CoordinateDivisor resolve(const ExplicitCurve& curve, VertexId v,
                          const PointDivisor& d);

/**
 * Coefficient space: the direct sum of L(D_v) over the support, blocks in
 * ascending vertex order.
 */
struct SectionLayout {
  std::map<VertexId, SectionBasis> bases;
  std::map<VertexId, std::size_t> offset;
  std::size_t ambient = 0;

  /// Row vector (length ambient) of values at p on v.
  std::vector<Rational> evaluation_row(VertexId v, const ProjectivePoint& p) const;
};

SectionLayout section_layout(const DualGraph& g, const ExplicitCurve& curve,
                             const ExplicitBundle& bundle);

/// Nodes inside the support, ascending edge id; one row each.
std::vector<EdgeId> internal_nodes(const DualGraph& g, const VertexSet& support);

/// The matching map: rows = internal nodes, columns = layout coefficients.
Matrix matching_matrix(const DualGraph& g, const ExplicitCurve& curve,
                       const ExplicitBundle& bundle, const SectionLayout& layout);

struct SectionSpace {
  SectionLayout layout;
  /// Rows are a basis of H^0 in layout coordinates (RREF).
  Matrix basis;

  std::size_t dimension() const { return basis.rows(); }
};

SectionSpace global_sections(const DualGraph& g, const ExplicitCurve& curve,
                             const ExplicitBundle& bundle);

struct CechDimensions {
  long h0 = 0;
  long h1 = 0;
  long chi = 0;

  bool operator==(const CechDimensions&) const = default;
};

/**
 * (h0, h1) with h1 = h0 - chi, chi = sum_v (deg D_v + 1) - #nodes. The
 * identity is cross-checked against #nodes - rank + sum_v h1(D_v).
 */
CechDimensions cech_h(const DualGraph& g, const ExplicitCurve& curve,
                      const ExplicitBundle& bundle);

/**
 * Matrix of the connecting map (+) k(p_i) -> H^1(O_W) for distinct smooth
 * points p_i on W, assembled from the evaluation map of O_W(sum p_i). Rows
 * are coordinates on H^1(O_W) given by a basis of the left kernel of the
 * matching map of O_W. O_W is the structure sheaf: the curve's gluing units
 * are ignored and nodes glue by equality.
 */
Matrix connecting_values(const DualGraph& g, const ExplicitCurve& curve,
                         const VertexSet& W,
                         const std::vector<SpecialPoint>& points);

/// The same map for a single point, computed from O_W(p) alone.
std::vector<Rational> connecting_value(const DualGraph& g,
                                       const ExplicitCurve& curve,
                                       const VertexSet& W,
                                       const SpecialPoint& point);

/**
 * O_E(-lambda) for a mesa on its support, gluing from the curve's units.
 * Throws NonCanonicalTopGluing when the units on the top have nontrivial
 * holonomy (the trivial bundle on the top would not have h0 equal to the
 * number of its connected components).
 */
ExplicitBundle mesa_bundle(const DualGraph& g, const ExplicitCurve& curve,
                           const Mesa& m);

struct BoundaryValues {
  /// Boundary edges (columns), ascending id.
  std::vector<EdgeId> boundary;
  /// Support-side endpoint of each boundary edge.
  std::vector<VertexId> inside;
  CechDimensions cohomology;
  SectionSpace sections;
  /// m x h0: column j holds the boundary values of the j-th basis section,
  /// transported to the outside branch across the gluing unit.
  Matrix evaluation;
  /// Basis of V (RREF).
  Matrix subspace;
  /// Basis of the annihilator of V (RREF); codim rows.
  Matrix functionals;
  std::size_t codim = 0;
  std::size_t kernel_dimension = 0;
};

/**
 * V = image of H^0(E, O_E(-lambda)) -> Q^m at the boundary points. Requires
 * h1 = 0 (NotAcyclic otherwise). Throws InvariantBreach unless
 * codim V = genus(E) and the evaluation kernel is one-dimensional.
 */
BoundaryValues boundary_value_space(const DualGraph& g, const ExplicitCurve& curve,
                                    const Mesa& m);

/// The defining functional of V when codim V = 1; empty otherwise.
std::vector<Rational> gorenstein_constants(const BoundaryValues& bv);

}  // namespace mesacurve
