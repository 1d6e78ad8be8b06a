#include "mesacurve/dual_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "mesacurve/errors.hpp"

namespace mesacurve {
namespace {

// Plain union-find over dense indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_subset(const DualGraph& g, const VertexSet& W, const char* what) {
  for (auto v : W) {
    if (!g.has_vertex(v)) {
      throw Error(ErrorCode::InvalidSubset,
                  std::string(what) + ": unknown vertex " + std::to_string(v));
    }
  }
}

}  // namespace

DualGraph::DualGraph(std::size_t rank, std::vector<Vertex> vertices,
                     std::vector<Edge> edges)
    : rank_(rank), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) {
    throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  }
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    auto& v = vertices_[i];
    if (!vertex_index_.emplace(v.id, i).second) {
      throw Error(ErrorCode::IntegrityError,
                  "duplicate vertex id " + std::to_string(v.id));
    }
    if (v.genus < 0) {
      throw Error(ErrorCode::InvalidGraph,
                  "negative genus at vertex " + std::to_string(v.id));
    }
    std::sort(v.markings.begin(), v.markings.end());
    for (auto h : v.markings) {
      if (!marking_owner_.emplace(h, v.id).second) {
        throw Error(ErrorCode::IntegrityError,
                    "duplicate marking id " + std::to_string(h));
      }
    }
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (!edge_index_.emplace(e.id, i).second) {
      throw Error(ErrorCode::IntegrityError,
                  "duplicate edge id " + std::to_string(e.id));
    }
    if (!has_vertex(e.v) || !has_vertex(e.w)) {
      throw Error(ErrorCode::IntegrityError,
                  "edge " + std::to_string(e.id) + " has an unknown endpoint");
    }
    if (e.delta.rank() != rank_) {
      throw Error(ErrorCode::RankMismatch,
                  "edge " + std::to_string(e.id) + " delta has rank " +
                      std::to_string(e.delta.rank()) + ", expected " +
                      std::to_string(rank_));
    }
    if (e.w < e.v) std::swap(e.v, e.w);
  }
  if (!is_connected(vertex_ids())) {
    throw Error(ErrorCode::Disconnected, "dual graph is not connected");
  }
}

const Vertex& DualGraph::vertex(VertexId id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) {
    throw Error(ErrorCode::InvalidSubset, "unknown vertex " + std::to_string(id));
  }
  return vertices_[it->second];
}

const Edge& DualGraph::edge(EdgeId id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) {
    throw Error(ErrorCode::InvalidSubset, "unknown edge " + std::to_string(id));
  }
  return edges_[it->second];
}

VertexSet DualGraph::vertex_ids() const {
  VertexSet s;
  for (const auto& v : vertices_) s.insert(v.id);
  return s;
}

VertexId DualGraph::marking_owner(MarkingId h) const {
  auto it = marking_owner_.find(h);
  if (it == marking_owner_.end()) {
    throw Error(ErrorCode::InvalidSubset, "unknown marking " + std::to_string(h));
  }
  return it->second;
}

std::vector<EdgeId> DualGraph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_) {
    if (e.touches(v)) out.push_back(e.id);
  }
  return out;
}

std::size_t DualGraph::valence(VertexId v) const {
  std::size_t n = 0;
  for (const auto& e : edges_) {
    if (e.v == v) ++n;
    if (e.w == v) ++n;
  }
  return n;
}

std::vector<EdgeId> DualGraph::induced_edges(const VertexSet& W) const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_) {
    if (W.count(e.v) && W.count(e.w)) out.push_back(e.id);
  }
  return out;
}

std::vector<EdgeId> DualGraph::boundary_edges(const VertexSet& W) const {
  std::vector<EdgeId> out;
  for (const auto& e : edges_) {
    if (W.count(e.v) != W.count(e.w)) out.push_back(e.id);
  }
  return out;
}

std::vector<VertexSet> DualGraph::components(const VertexSet& W) const {
  std::vector<VertexId> ids(W.begin(), W.end());
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < ids.size(); ++i) pos[ids[i]] = i;
  UnionFind uf(ids.size());
  for (const auto& e : edges_) {
    auto a = pos.find(e.v), b = pos.find(e.w);
    if (a != pos.end() && b != pos.end()) uf.unite(a->second, b->second);
  }
  std::map<std::size_t, VertexSet> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[uf.find(i)].insert(ids[i]);
  std::vector<VertexSet> out;
  for (auto& [root, set] : groups) out.push_back(std::move(set));
  return out;
}

bool DualGraph::is_connected(const VertexSet& W) const {
  return !W.empty() && components(W).size() == 1;
}

std::string DualGraph::to_dot() const {
  std::ostringstream out;
  out << "graph dual {\n";
  for (const auto& v : vertices_) {
    out << "  v" << v.id << " [label=\"" << v.genus << "\"";
    if (v.genus > 0) out << ", shape=circle";
    out << "];\n";
    for (auto h : v.markings) {
      out << "  h" << h << " [shape=point];\n";
      out << "  v" << v.id << " -- h" << h << ";\n";
    }
  }
  for (const auto& e : edges_) {
    out << "  v" << e.v << " -- v" << e.w << " [label=\"" << to_string(e.delta)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

long first_betti(const DualGraph& g, const VertexSet& W) {
  const long edges = static_cast<long>(g.induced_edges(W).size());
  const long comps = static_cast<long>(g.components(W).size());
  return edges - static_cast<long>(W.size()) + comps;
}

long genus(const DualGraph& g, const VertexSet& W, bool require_connected) {
  require_subset(g, W, "genus");
  if (require_connected && !g.is_connected(W)) {
    throw Error(ErrorCode::Disconnected,
                "genus: vertex subset does not induce a connected subgraph");
  }
  long total = first_betti(g, W);
  for (auto v : W) total += g.vertex(v).genus;
  return total;
}

long genus(const DualGraph& g) { return genus(g, g.vertex_ids()); }

VertexSet core(const DualGraph& g, const VertexSet& E) {
  if (genus(g, E) == 0) {
    throw Error(ErrorCode::GenusZeroCore,
                "core is only defined for subcurves of positive genus");
  }
  VertexSet remaining = E;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v : remaining) {
      if (g.vertex(v).genus != 0) continue;
      std::size_t val = 0;
      for (auto eid : g.incident_edges(v)) {
        const auto& e = g.edge(eid);
        if (!remaining.count(e.other(v))) continue;
        val += e.is_loop() ? 2 : 1;
      }
      if (val <= 1) {
        remaining.erase(v);
        changed = true;
        break;  // restart from the smallest id
      }
    }
  }
  return remaining;
}

std::map<VertexId, Path> paths_from_top(const DualGraph& g, const VertexSet& E,
                                        const VertexSet& F) {
  require_subset(g, E, "paths_from_top");
  for (auto v : F) {
    if (!E.count(v)) {
      throw Error(ErrorCode::InvalidSubset, "top is not contained in support");
    }
  }
  if (!g.is_connected(E) || !g.is_connected(F)) {
    throw Error(ErrorCode::Disconnected,
                "support and top must induce connected subgraphs");
  }
  // Gamma(E)/Gamma(F): vertices (E - F) plus one point for F; the edges are
  // those of E not inside F. It is a tree iff connected with |V| - 1 edges.
  std::size_t quotient_edges = 0;
  for (auto eid : g.induced_edges(E)) {
    const auto& e = g.edge(eid);
    if (F.count(e.v) && F.count(e.w)) continue;
    if (e.is_loop()) {
      throw Error(ErrorCode::NotATree,
                  "loop outside the top: Gamma(E)/Gamma(F) is not a tree");
    }
    ++quotient_edges;
  }
  const std::size_t quotient_vertices = E.size() - F.size() + 1;
  if (quotient_edges != quotient_vertices - 1) {
    throw Error(ErrorCode::NotATree,
                "Gamma(E)/Gamma(F) is not a tree (top has smaller genus than "
                "support)");
  }

  std::map<VertexId, Path> paths;
  std::queue<VertexId> frontier;
  for (auto v : F) {
    paths[v] = Path{{v}, {}};
    frontier.push(v);
  }
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (auto eid : g.incident_edges(u)) {
      const auto& e = g.edge(eid);
      const VertexId w = e.other(u);
      if (!E.count(w) || F.count(w) || paths.count(w)) continue;
      Path p = paths[u];
      p.edges.push_back(eid);
      p.vertices.push_back(w);
      paths[w] = std::move(p);
      frontier.push(w);
    }
  }
  // Connected and tree-counted, so every vertex of E was reached exactly once.
  return paths;
}

Path unique_path_from_top(const DualGraph& g, const VertexSet& E,
                          const VertexSet& F, VertexId v) {
  if (!E.count(v)) {
    throw Error(ErrorCode::InvalidSubset,
                "vertex " + std::to_string(v) + " is not in the support");
  }
  return paths_from_top(g, E, F).at(v);
}

MonoidElement path_length(const DualGraph& g, const Path& p) {
  MonoidElement total = MonoidElement::zero(g.rank());
  for (auto eid : p.edges) total = total + g.edge(eid).delta;
  return total;
}

EdgeContraction contract_edges(const DualGraph& g, const std::set<EdgeId>& Z) {
  std::vector<VertexId> ids;
  std::map<VertexId, std::size_t> pos;
  for (const auto& v : g.vertices()) {
    pos[v.id] = ids.size();
    ids.push_back(v.id);
  }
  UnionFind uf(ids.size());
  for (auto eid : Z) {
    const auto& e = g.edge(eid);
    uf.unite(pos[e.v], pos[e.w]);
  }
  // Smallest id of each class is its representative (indices follow ids).
  std::map<VertexId, VertexId> vmap;
  for (std::size_t i = 0; i < ids.size(); ++i) vmap[ids[i]] = ids[uf.find(i)];

  std::map<VertexId, Vertex> merged;
  for (const auto& v : g.vertices()) {
    auto& target = merged[vmap[v.id]];
    target.id = vmap[v.id];
    target.genus += v.genus;
    target.markings.insert(target.markings.end(), v.markings.begin(),
                           v.markings.end());
  }
  // b1 of the contracted sub-multigraph inside each class.
  std::map<VertexId, long> class_edges;
  std::map<VertexId, long> class_size;
  for (const auto& v : g.vertices()) ++class_size[vmap[v.id]];
  for (auto eid : Z) ++class_edges[vmap[g.edge(eid).v]];
  for (auto& [rep, vtx] : merged) {
    vtx.genus += class_edges[rep] - class_size[rep] + 1;
  }

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (Z.count(e.id)) continue;
    Edge ne = e;
    ne.v = vmap[e.v];
    ne.w = vmap[e.w];
    edges.push_back(std::move(ne));
  }
  std::vector<Vertex> verts;
  for (auto& [rep, vtx] : merged) verts.push_back(std::move(vtx));
  return EdgeContraction{DualGraph(g.rank(), std::move(verts), std::move(edges)),
                         std::move(vmap)};
}

DualGraph relabel(const DualGraph& g, const std::map<VertexId, VertexId>& vmap,
                  const std::map<EdgeId, EdgeId>& emap,
                  const std::map<MarkingId, MarkingId>& hmap) {
  std::vector<Vertex> verts;
  for (const auto& v : g.vertices()) {
    Vertex nv{vmap.at(v.id), v.genus, {}};
    for (auto h : v.markings) nv.markings.push_back(hmap.at(h));
    verts.push_back(std::move(nv));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back(Edge{emap.at(e.id), vmap.at(e.v), vmap.at(e.w), e.delta});
  }
  return DualGraph(g.rank(), std::move(verts), std::move(edges));
}

}  // namespace mesacurve
