#pragma once

#include <utility>
#include <vector>

namespace fvs {

using VertexId = int;
using EdgeId = int;

struct Component {
  std::vector<VertexId> vertices;
  int edge_count = 0;  // internal edges, counting multiplicity and self-loops
  bool tree = false;   // edge_count == vertices.size() - 1
};

// Undirected multigraph with stable identifiers. Vertex and edge slots are
// tombstoned on removal and never reused within one graph lifetime, so ids
// recorded by one pass (reduction logs, packings) stay valid across later
// mutations. Parallel edges carry distinct EdgeIds. A self-loop appears twice
// in its vertex's incidence list and contributes 2 to the degree.
class MultiGraph {
 public:
  MultiGraph() = default;

  VertexId add_vertex();
  // u == v creates a self-loop. Unknown endpoints are an error.
  EdgeId add_edge(VertexId u, VertexId v);
  void remove_edge(EdgeId e);
  // Removes v together with all incident edges (including self-loops).
  void remove_vertex(VertexId v);

  bool has_vertex(VertexId v) const {
    return v >= 0 && v < static_cast<int>(verts_.size()) && verts_[v].alive;
  }
  bool has_edge(EdgeId e) const {
    return e >= 0 && e < static_cast<int>(edges_.size()) && edges_[e].alive;
  }

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  // Exclusive upper bounds on ever-issued ids; use for dense id-indexed arrays.
  int vertex_id_bound() const { return static_cast<int>(verts_.size()); }
  int edge_id_bound() const { return static_cast<int>(edges_.size()); }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  VertexId other_endpoint(EdgeId e, VertexId v) const;
  bool is_self_loop(EdgeId e) const;

  int degree(VertexId v) const;
  bool has_self_loop_at(VertexId v) const;
  // Number of parallel edges between u and v; self-loops count once per loop.
  int multiplicity(VertexId u, VertexId v) const;

  // Incident edge ids in unspecified order; a self-loop appears twice.
  const std::vector<EdgeId>& incident_edges(VertexId v) const;

  std::vector<VertexId> vertices() const;  // alive ids, ascending
  std::vector<EdgeId> edges() const;       // alive ids, ascending

  // Connected components of the graph induced on V minus `avoid`.
  std::vector<Component> components_avoiding(const std::vector<VertexId>& avoid) const;

  // Full O(n + m) structural audit; throws internal_error on any mismatch
  // between the edge table and the incidence lists.
  void check_consistency() const;

 private:
  struct VertexSlot {
    std::vector<EdgeId> inc;
    int loops = 0;  // number of self-loop edges at this vertex
    bool alive = false;
  };
  struct EdgeSlot {
    VertexId u = -1, v = -1;
    int pos_u = -1, pos_v = -1;  // positions inside the incidence lists
    bool alive = false;
  };

  void erase_incidence_entry(VertexId x, int pos);

  std::vector<VertexSlot> verts_;
  std::vector<EdgeSlot> edges_;
  int n_ = 0;
  int m_ = 0;
};

// Incidence lists rebuilt with edge ids ascending (self-loops twice). Used
// where iteration order must be deterministic regardless of mutation history.
std::vector<std::vector<EdgeId>> incidence_sorted_by_edge(const MultiGraph& g);

}  // namespace fvs
