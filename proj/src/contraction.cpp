#include "mesacurve/contraction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

std::string branch_derivative(std::size_t i) {
  const std::string k = std::to_string(i + 1);
  return "df_" + k + "/dx_" + k + "(0)";
}

std::string coefficient_prefix(const Rational& k) {
  if (k == 1) return "";
  if (k == -1) return "-";
  return to_string(k) + "*";
}

std::string join_pieces(const std::vector<std::string>& pieces) {
  if (pieces.size() == 1) return pieces.front();
  if (pieces.size() == 2) return pieces[0] + " glued transversally to " + pieces[1];
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i) out += i + 1 == pieces.size() ? " and " : ", ";
    out += pieces[i];
  }
  return out + " glued transversally";
}

std::string elliptic_name(std::size_t b) {
  if (b == 1) return "cusp";
  if (b == 2) return "tacnode";
  return "elliptic " + std::to_string(b) + "-fold point";
}

std::string article(const std::string& noun) {
  return (noun[0] == 'e' ? "an " : "a ") + noun;
}

}  // namespace

const char* to_string(Ternary t) {
  switch (t) {
    case Ternary::Yes: return "yes";
    case Ternary::No: return "no";
    case Ternary::Unknown: return "unknown";
  }
  return "?";
}

long genus_of_singularity(long delta, long m) {
  if (delta < 0 || m < 1) {
    throw Error(ErrorCode::InvalidSingularity,
                "need delta >= 0 and m >= 1, got delta = " + std::to_string(delta) +
                    ", m = " + std::to_string(m));
  }
  const long g = delta - m + 1;
  if (g < 0) {
    throw Error(ErrorCode::InvalidSingularity,
                "delta = " + std::to_string(delta) + " is too small for " +
                    std::to_string(m) + " branches");
  }
  return g;
}

bool is_elliptic_gorenstein(const Matrix& functionals) {
  if (functionals.rows() != 1) return false;
  for (std::size_t j = 0; j < functionals.cols(); ++j) {
    if (functionals(0, j) == 0) return false;
  }
  return true;
}

Ternary classify_gorenstein(const SingularityDescriptor& d) {
  if (d.genus != 1) {
    throw Error(ErrorCode::NotApplicable,
                "Gorenstein classification applies to genus-1 points, this one has "
                "genus " +
                    std::to_string(d.genus));
  }
  if (!d.values) {
    throw Error(ErrorCode::NotApplicable,
                "boundary values unavailable without explicit geometry");
  }
  return is_elliptic_gorenstein(d.values->functionals) ? Ternary::Yes : Ternary::No;
}

std::string describe_singularity(const Matrix& functionals, std::size_t m) {
  // Coordinates linked by a common functional form one block.
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> constrained(m, false);
  for (std::size_t r = 0; r < functionals.rows(); ++r) {
    std::optional<std::size_t> first;
    for (std::size_t j = 0; j < m; ++j) {
      if (functionals(r, j) == 0) continue;
      constrained[j] = true;
      if (first) parent[find(j)] = find(*first);
      else first = j;
    }
  }
  if (functionals.rows() == 0) {
    if (m == 1) return "smooth point";
    if (m == 2) return "node";
    return "ordinary " + std::to_string(m) + "-fold point";
  }

  std::map<std::size_t, std::vector<std::size_t>> blocks;
  std::size_t free_branches = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (constrained[j]) blocks[find(j)].push_back(j);
    else ++free_branches;
  }
  std::map<std::string, std::size_t> counts;
  std::vector<std::string> order;
  for (const auto& [root, members] : blocks) {
    std::size_t rows_here = 0;
    bool all_nonzero = true;
    for (std::size_t r = 0; r < functionals.rows(); ++r) {
      bool touches = false;
      for (auto j : members) touches = touches || functionals(r, j) != 0;
      if (!touches) continue;
      ++rows_here;
      for (auto j : members) all_nonzero = all_nonzero && functionals(r, j) != 0;
    }
    std::string name;
    if (rows_here == 1 && all_nonzero) {
      name = elliptic_name(members.size());
    } else if (rows_here == members.size()) {
      name = std::to_string(members.size()) +
             "-branch point with vanishing first derivatives";
    } else {
      name = "genus-" + std::to_string(rows_here) + " point with " +
             std::to_string(members.size()) + " branches";
    }
    if (!counts.count(name)) order.push_back(name);
    ++counts[name];
  }
  std::vector<std::string> pieces;
  for (const auto& name : order) {
    const std::size_t c = counts[name];
    if (c == 1) {
      pieces.push_back(order.size() == 1 && !free_branches ? name : article(name));
    } else if (name == "cusp" || name == "tacnode") {
      pieces.push_back(std::to_string(c) + " " + name + "s");
    } else {
      pieces.push_back(std::to_string(c) + " copies of " + article(name));
    }
  }
  if (free_branches) {
    pieces.push_back(free_branches == 1
                         ? std::string("a smooth branch")
                         : std::to_string(free_branches) + " smooth branches");
  }
  if (pieces.size() == 1 && counts.begin()->second > 1) {
    return pieces.front() + " glued transversally";
  }
  return join_pieces(pieces);
}

SingularityDescriptor describe_mesa(const DualGraph& g, const Mesa& m,
                                    const ExplicitCurve* geometry) {
  SingularityDescriptor d;
  d.support = m.support;
  d.point = *m.support.begin();
  d.genus = genus(g, m.support);
  for (auto eid : g.boundary_edges(m.support)) {
    const auto& e = g.edge(eid);
    BranchData b;
    b.edge = eid;
    b.outside = m.support.count(e.v) ? e.w : e.v;
    b.point = end_at(e, b.outside);
    if (geometry && geometry->realizes(b.outside)) {
      b.coordinate = geometry->coordinate(b.outside, b.point);
    }
    d.branch_data.push_back(b);
  }
  d.branches = static_cast<long>(d.branch_data.size());

  const bool realized =
      geometry && std::all_of(m.support.begin(), m.support.end(),
                              [&](VertexId v) { return geometry->realizes(v); });
  if (realized) {
    d.values = boundary_value_space(g, *geometry, m);
    d.delta = d.branches - 1 + static_cast<long>(d.values->codim);
    d.constants = gorenstein_constants(*d.values);
    d.shape = describe_singularity(d.values->functionals,
                                   static_cast<std::size_t>(d.branches));
  } else {
    d.delta = d.genus + d.branches - 1;
    if (d.genus == 0) {
      d.shape = describe_singularity(Matrix(0, d.branches), d.branches);
    } else if (d.genus == 1 && is_small(g, m)) {
      // A small genus-1 mesa always yields one functional with no zero entry.
      Matrix generic(1, d.branches);
      for (long i = 0; i < d.branches; ++i) generic(0, i) = 1;
      d.shape = describe_singularity(generic, d.branches);
    } else {
      d.shape = "genus-" + std::to_string(d.genus) + " point with " +
                std::to_string(d.branches) + " branches (gluing data not given)";
    }
  }
  if (d.genus != 1) {
    d.elliptic_gorenstein = Ternary::No;
  } else if (d.values) {
    d.elliptic_gorenstein = classify_gorenstein(d);
  } else if (is_small(g, m)) {
    d.elliptic_gorenstein = Ternary::Yes;
  } else {
    d.elliptic_gorenstein = Ternary::Unknown;
  }
  if (genus_of_singularity(d.delta, d.branches) != d.genus) {
    throw Error(ErrorCode::InvariantBreach,
                "singularity at support " + std::to_string(d.point) +
                    " violates g = delta - m + 1");
  }
  return d;
}

ContractedFiber contract_fiber(const DualGraph& g, const MesaDecomposition& dec,
                               const ExplicitCurve* geometry) {
  std::set<EdgeId> collapse;
  for (const auto& m : dec.mesas) {
    for (auto eid : g.induced_edges(m.support)) collapse.insert(eid);
  }
  auto contracted = contract_edges(g, collapse);

  ContractedFiber out;
  out.vertex_map = contracted.vertex_map;
  std::set<VertexId> points;
  long singular_genus = 0;
  for (const auto& m : dec.mesas) {
    auto d = describe_mesa(g, m, geometry);
    d.point = contracted.vertex_map.at(*m.support.begin());
    points.insert(d.point);
    singular_genus += d.genus;
    out.singularities.push_back(std::move(d));
  }

  std::vector<Vertex> vertices = contracted.graph.vertices();
  for (auto& v : vertices) {
    if (points.count(v.id)) v.genus = 0;
  }
  out.graph = DualGraph(g.rank(), vertices, contracted.graph.edges());

  if (genus(g) != genus(out.graph) + singular_genus) {
    throw Error(ErrorCode::InvariantBreach,
                "contraction changed the arithmetic genus: " +
                    std::to_string(genus(g)) + " before, " +
                    std::to_string(genus(out.graph)) + " + " +
                    std::to_string(singular_genus) + " after");
  }
  return out;
}

std::string jet_relation(const std::vector<Rational>& c) {
  std::vector<std::size_t> nz;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) nz.push_back(j);
  if (nz.empty()) return "0 = 0";
  if (nz.size() == 1) return branch_derivative(nz[0]) + " = 0";
  if (nz.size() == 2) {
    const Rational k = -c[nz[0]] / c[nz[1]];
    return coefficient_prefix(k) + branch_derivative(nz[0]) + " = " +
           branch_derivative(nz[1]);
  }
  std::string out;
  for (auto j : nz) {
    Rational k = c[j];
    if (out.empty()) {
      out = coefficient_prefix(k) + branch_derivative(j);
    } else {
      out += k < 0 ? " - " : " + ";
      out += coefficient_prefix(k < 0 ? Rational(-k) : k) + branch_derivative(j);
    }
  }
  return out + " = 0";
}

std::string RingPresentation::to_text() const {
  std::ostringstream out;
  out << "branches: " << branches << " (local parameters";
  for (std::size_t i = 0; i < branches; ++i) out << " x_" << i + 1;
  out << ")\n";
  for (const auto& c : value_conditions) out << "  " << c << '\n';
  for (const auto& r : jet_relations) out << "  " << r << '\n';
  out << "type: " << shape << '\n';
  return out.str();
}

RingPresentation ring_presentation(const BoundaryValues& bv) {
  RingPresentation p;
  p.branches = bv.boundary.size();
  for (std::size_t i = 1; i < p.branches; ++i) {
    p.value_conditions.push_back("f_1(0) = f_" + std::to_string(i + 1) + "(0)");
  }
  p.jet_conditions = bv.functionals;
  for (std::size_t r = 0; r < p.jet_conditions.rows(); ++r) {
    p.jet_relations.push_back(jet_relation(p.jet_conditions.row(r)));
  }
  p.shape = describe_singularity(p.jet_conditions, p.branches);
  return p;
}

RingPresentation ring_presentation(const DualGraph& g, const Mesa& m,
                                   const ExplicitCurve* geometry) {
  if (!geometry) {
    throw Error(ErrorCode::MissingGeometry,
                "ring presentation needs explicit geometry on the support");
  }
  for (auto v : m.support) {
    if (!geometry->realizes(v)) {
      throw Error(ErrorCode::MissingGeometry,
                  "vertex " + std::to_string(v) + " of the support is not realized");
    }
  }
  return ring_presentation(boundary_value_space(g, *geometry, m));
}

TruncatedRing::TruncatedRing(Matrix subspace, std::size_t m, std::size_t truncation)
    : subspace_(row_space(subspace)), m_(m), n_(truncation) {
  if (subspace.cols() != m) {
    throw Error(ErrorCode::InvariantBreach, "subspace width differs from branch count");
  }
  if (n_ < 1) {
    throw Error(ErrorCode::SchemaError, "truncation must be at least 1");
  }
  functionals_ = kernel(subspace_);
}

TruncatedRing TruncatedRing::from(const BoundaryValues& bv, std::size_t truncation) {
  return TruncatedRing(bv.subspace, bv.boundary.size(), truncation);
}

BbarElement TruncatedRing::zero() const {
  BbarElement u;
  u.branches.assign(m_, std::vector<Rational>(n_));
  u.constant = 0;
  return u;
}

BbarElement TruncatedRing::one() const {
  BbarElement u = zero();
  u.constant = 1;
  return u;
}

void TruncatedRing::check_shape(const BbarElement& u) const {
  bool ok = u.branches.size() == m_;
  for (const auto& b : u.branches) ok = ok && b.size() == n_;
  if (!ok) {
    throw Error(ErrorCode::NotInRing, "element does not match the ring's shape");
  }
}

std::vector<Rational> TruncatedRing::linear_terms(const BbarElement& u) const {
  check_shape(u);
  std::vector<Rational> a;
  for (const auto& b : u.branches) a.push_back(b[0]);
  return a;
}

bool TruncatedRing::contains(const BbarElement& u) const {
  const auto a = linear_terms(u);
  for (std::size_t r = 0; r < functionals_.rows(); ++r) {
    Rational s = 0;
    for (std::size_t j = 0; j < m_; ++j) s += functionals_(r, j) * a[j];
    if (s != 0) return false;
  }
  return true;
}

BbarElement TruncatedRing::add(const BbarElement& u, const BbarElement& v) const {
  check_shape(u);
  check_shape(v);
  BbarElement w = u;
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t d = 0; d < n_; ++d) w.branches[i][d] += v.branches[i][d];
  w.constant += v.constant;
  return w;
}

BbarElement TruncatedRing::scale(const Rational& a, const BbarElement& u) const {
  check_shape(u);
  BbarElement w = u;
  for (auto& b : w.branches)
    for (auto& x : b) x *= a;
  w.constant *= a;
  return w;
}

BbarElement TruncatedRing::multiply(const BbarElement& u, const BbarElement& v) const {
  if (!contains(u) || !contains(v)) {
    throw Error(ErrorCode::NotInRing, "factor is not in the ring");
  }
  BbarElement w = zero();
  w.constant = u.constant * v.constant;
  for (std::size_t i = 0; i < m_; ++i) {
    const auto& f = u.branches[i];
    const auto& h = v.branches[i];
    // coefficient index d stands for x^(d+1)
    for (std::size_t a = 0; a < n_; ++a) {
      if (f[a] == 0) continue;
      for (std::size_t b = 0; b < n_; ++b) {
        if (h[b] == 0) continue;
        const std::size_t deg = a + b + 2;
        if (deg > n_) {
          throw Error(ErrorCode::TruncationExceeded,
                      "product has a term of degree " + std::to_string(deg) +
                          " on branch " + std::to_string(i + 1) +
                          ", beyond the truncation " + std::to_string(n_));
        }
        w.branches[i][deg - 1] += f[a] * h[b];
      }
    }
    for (std::size_t d = 0; d < n_; ++d) {
      w.branches[i][d] += f[d] * v.constant + h[d] * u.constant;
    }
  }
  return w;
}

std::vector<BbarElement> TruncatedRing::basis() const {
  std::vector<BbarElement> out;
  out.push_back(one());
  for (std::size_t r = 0; r < subspace_.rows(); ++r) {
    BbarElement u = zero();
    for (std::size_t i = 0; i < m_; ++i) u.branches[i][0] = subspace_(r, i);
    out.push_back(u);
  }
  for (std::size_t i = 0; i < m_; ++i) {
    for (std::size_t d = 1; d < n_; ++d) {
      BbarElement u = zero();
      u.branches[i][d] = 1;
      out.push_back(u);
    }
  }
  return out;
}

std::vector<Rational> TruncatedRing::flatten(const BbarElement& u) const {
  std::vector<Rational> out;
  for (const auto& b : u.branches) {
    out.push_back(u.constant);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::size_t TruncatedRing::delta() const {
  Matrix span(0, m_ * (n_ + 1));
  for (const auto& u : basis()) span.append_row(flatten(u));
  return m_ * (n_ + 1) - rank(span);
}

BbarElement bbar_multiply(const TruncatedRing& ring, const BbarElement& u,
                          const BbarElement& v) {
  return ring.multiply(u, v);
}

}  // namespace mesacurve
