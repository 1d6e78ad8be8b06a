/**
 * Dual graphs of nodal curve fibers.
 *
 * Vertices are irreducible components (with geometric genus and marked
 * points), edges are nodes carrying a smoothing parameter in N^r. Loops are
 * allowed. Ids are arbitrary non-negative integers; marking ids share one
 * namespace across the graph.
 */
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mesacurve/monoid.hpp"

namespace mesacurve {

using VertexId = long;
using EdgeId = long;
using MarkingId = long;
using VertexSet = std::set<VertexId>;

struct Vertex {
  VertexId id = 0;
  long genus = 0;
  std::vector<MarkingId> markings;

  bool operator==(const Vertex&) const = default;
};

struct Edge {
  EdgeId id = 0;
  VertexId v = 0;
  VertexId w = 0;
  MonoidElement delta;

  bool is_loop() const { return v == w; }
  bool touches(VertexId x) const { return v == x || w == x; }
  /// The endpoint opposite to x (x itself for a loop).
  VertexId other(VertexId x) const { return x == v ? w : v; }

  bool operator==(const Edge&) const = default;
};

class DualGraph {
 public:
  DualGraph() = default;
  /// Validates ids, ranks and connectivity; throws Error otherwise.
  DualGraph(std::size_t rank, std::vector<Vertex> vertices,
            std::vector<Edge> edges);

  std::size_t rank() const { return rank_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(VertexId id) const { return vertex_index_.count(id) > 0; }
  bool has_edge(EdgeId id) const { return edge_index_.count(id) > 0; }
  const Vertex& vertex(VertexId id) const;
  const Edge& edge(EdgeId id) const;

  VertexSet vertex_ids() const;
  /// Vertex owning a marking.
  VertexId marking_owner(MarkingId h) const;
  bool has_marking(MarkingId h) const { return marking_owner_.count(h) > 0; }

  /// Edges with at least one end at v, in ascending id order.
  std::vector<EdgeId> incident_edges(VertexId v) const;
  /// Number of edge ends at v (loops count twice).
  std::size_t valence(VertexId v) const;

  /// Edges with both ends in W.
  std::vector<EdgeId> induced_edges(const VertexSet& W) const;
  /// Edges with exactly one end in W.
  std::vector<EdgeId> boundary_edges(const VertexSet& W) const;
  /// Connected components of the subgraph induced on W.
  std::vector<VertexSet> components(const VertexSet& W) const;
  bool is_connected(const VertexSet& W) const;

  /// Graphviz rendering: vertex label is the genus, edge label the delta.
  std::string to_dot() const;

  bool operator==(const DualGraph& other) const {
    return rank_ == other.rank_ && vertices_ == other.vertices_ &&
           edges_ == other.edges_;
  }

 private:
  std::size_t rank_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_index_;
  std::map<EdgeId, std::size_t> edge_index_;
  std::map<MarkingId, VertexId> marking_owner_;
};

struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  bool empty() const { return edges.empty(); }
  bool operator==(const Path&) const = default;
};

/// First Betti number of the subgraph induced on W.
long first_betti(const DualGraph& g, const VertexSet& W);

/**
 * Arithmetic genus of the subcurve W: b1 of the induced subgraph plus the
 * vertex genera. With require_connected, a disconnected W is an error;
 * otherwise the per-component genera are summed.
 */
long genus(const DualGraph& g, const VertexSet& W, bool require_connected = true);
long genus(const DualGraph& g);

/**
 * Minimal connected subcurve of E with the same arithmetic genus. Obtained by
 * pruning rational vertices of valence at most one, smallest id first.
 */
VertexSet core(const DualGraph& g, const VertexSet& E);

/**
 * The unique path v_1 e_1 ... v in the graph of E whose first vertex lies in
 * F and whose other vertices avoid F. A vertex of F yields the trivial path
 * {v}. Throws NotATree when Gamma(E)/Gamma(F) is not a tree.
 */
Path unique_path_from_top(const DualGraph& g, const VertexSet& E,
                          const VertexSet& F, VertexId v);

/// All such paths at once, keyed by vertex of E.
std::map<VertexId, Path> paths_from_top(const DualGraph& g, const VertexSet& E,
                                        const VertexSet& F);

MonoidElement path_length(const DualGraph& g, const Path& p);

struct EdgeContraction {
  DualGraph graph;
  /// Old vertex id to the id of its image (the smallest id in its class).
  std::map<VertexId, VertexId> vertex_map;
};

/**
 * Contracts the edges in Z. A merged vertex gets the sum of the merged
 * genera plus the first Betti number of the contracted sub-multigraph.
 */
EdgeContraction contract_edges(const DualGraph& g, const std::set<EdgeId>& Z);

/// Same graph with every vertex, edge and marking id passed through the maps.
DualGraph relabel(const DualGraph& g, const std::map<VertexId, VertexId>& vmap,
                  const std::map<EdgeId, EdgeId>& emap,
                  const std::map<MarkingId, MarkingId>& hmap);

}  // namespace mesacurve
