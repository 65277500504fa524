#include "fvs/multigraph.hpp"

#include <algorithm>

#include "fvs/check.hpp"

namespace fvs {

VertexId MultiGraph::add_vertex() {
  verts_.push_back(VertexSlot{});
  verts_.back().alive = true;
  ++n_;
  return static_cast<VertexId>(verts_.size()) - 1;
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  require(has_vertex(u) && has_vertex(v), "add_edge: unknown vertex");
  EdgeId e = static_cast<EdgeId>(edges_.size());
  EdgeSlot slot;
  slot.u = u;
  slot.v = v;
  slot.alive = true;
  slot.pos_u = static_cast<int>(verts_[u].inc.size());
  verts_[u].inc.push_back(e);
  slot.pos_v = static_cast<int>(verts_[v].inc.size());
  verts_[v].inc.push_back(e);
  if (u == v) ++verts_[u].loops;
  edges_.push_back(slot);
  ++m_;
  return e;
}

void MultiGraph::erase_incidence_entry(VertexId x, int pos) {
  auto& inc = verts_[x].inc;
  int last = static_cast<int>(inc.size()) - 1;
  if (pos != last) {
    EdgeId moved = inc[last];
    inc[pos] = moved;
    EdgeSlot& ms = edges_[moved];
    if (ms.u == x && ms.pos_u == last) {
      ms.pos_u = pos;
    } else {
      FVS_CHECK(ms.v == x && ms.pos_v == last, "incidence position out of sync");
      ms.pos_v = pos;
    }
  }
  inc.pop_back();
}

void MultiGraph::remove_edge(EdgeId e) {
  require(has_edge(e), "remove_edge: unknown edge");
  EdgeSlot& s = edges_[e];
  if (s.u == s.v) {
    // both positions live in the same list; drop the higher one first so the
    // lower stays valid
    erase_incidence_entry(s.u, std::max(s.pos_u, s.pos_v));
    erase_incidence_entry(s.u, std::min(s.pos_u, s.pos_v));
    --verts_[s.u].loops;
  } else {
    erase_incidence_entry(s.u, s.pos_u);
    erase_incidence_entry(s.v, s.pos_v);
  }
  s.alive = false;
  --m_;
}

void MultiGraph::remove_vertex(VertexId v) {
  require(has_vertex(v), "remove_vertex: unknown vertex");
  auto& inc = verts_[v].inc;
  while (!inc.empty()) remove_edge(inc.back());
  verts_[v].alive = false;
  --n_;
}

std::pair<VertexId, VertexId> MultiGraph::endpoints(EdgeId e) const {
  require(has_edge(e), "endpoints: unknown edge");
  return {edges_[e].u, edges_[e].v};
}

VertexId MultiGraph::other_endpoint(EdgeId e, VertexId v) const {
  require(has_edge(e), "other_endpoint: unknown edge");
  const EdgeSlot& s = edges_[e];
  require(s.u == v || s.v == v, "other_endpoint: vertex not on edge");
  return s.u == v ? s.v : s.u;
}

bool MultiGraph::is_self_loop(EdgeId e) const {
  require(has_edge(e), "is_self_loop: unknown edge");
  return edges_[e].u == edges_[e].v;
}

int MultiGraph::degree(VertexId v) const {
  require(has_vertex(v), "degree: unknown vertex");
  return static_cast<int>(verts_[v].inc.size());
}

bool MultiGraph::has_self_loop_at(VertexId v) const {
  require(has_vertex(v), "has_self_loop_at: unknown vertex");
  return verts_[v].loops > 0;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  require(has_vertex(u) && has_vertex(v), "multiplicity: unknown vertex");
  if (u == v) return verts_[u].loops;
  VertexId probe = verts_[u].inc.size() <= verts_[v].inc.size() ? u : v;
  VertexId want = probe == u ? v : u;
  int count = 0;
  for (EdgeId e : verts_[probe].inc) {
    if (other_endpoint(e, probe) == want) ++count;
  }
  return count;
}

const std::vector<EdgeId>& MultiGraph::incident_edges(VertexId v) const {
  require(has_vertex(v), "incident_edges: unknown vertex");
  return verts_[v].inc;
}

std::vector<VertexId> MultiGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(n_);
  for (VertexId v = 0; v < vertex_id_bound(); ++v)
    if (verts_[v].alive) out.push_back(v);
  return out;
}

std::vector<EdgeId> MultiGraph::edges() const {
  std::vector<EdgeId> out;
  out.reserve(m_);
  for (EdgeId e = 0; e < edge_id_bound(); ++e)
    if (edges_[e].alive) out.push_back(e);
  return out;
}

std::vector<Component> MultiGraph::components_avoiding(const std::vector<VertexId>& avoid) const {
  std::vector<char> avoided(verts_.size(), 0);
  for (VertexId v : avoid)
    if (v >= 0 && v < vertex_id_bound()) avoided[v] = 1;

  std::vector<int> comp(verts_.size(), -1);
  std::vector<Component> out;
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < vertex_id_bound(); ++root) {
    if (!verts_[root].alive || avoided[root] || comp[root] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[root] = id;
    stack.assign(1, root);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out[id].vertices.push_back(v);
      for (EdgeId e : verts_[v].inc) {
        VertexId w = other_endpoint(e, v);
        if (avoided[w] || comp[w] >= 0) continue;
        comp[w] = id;
        stack.push_back(w);
      }
    }
    std::sort(out[id].vertices.begin(), out[id].vertices.end());
  }

  // One pass over edges; an edge is internal iff neither endpoint is avoided.
  for (EdgeId e = 0; e < edge_id_bound(); ++e) {
    const EdgeSlot& s = edges_[e];
    if (!s.alive || avoided[s.u] || avoided[s.v]) continue;
    FVS_CHECK(comp[s.u] == comp[s.v], "edge endpoints in different components");
    ++out[comp[s.u]].edge_count;
  }
  for (Component& c : out) c.tree = c.edge_count == static_cast<int>(c.vertices.size()) - 1;
  return out;
}

void MultiGraph::check_consistency() const {
  int n = 0, m = 0;
  long long degree_sum = 0;
  for (VertexId v = 0; v < vertex_id_bound(); ++v) {
    if (!verts_[v].alive) {
      FVS_CHECK(verts_[v].inc.empty(), "dead vertex with incident edges");
      continue;
    }
    ++n;
    degree_sum += static_cast<long long>(verts_[v].inc.size());
    int loops = 0;
    for (int i = 0; i < static_cast<int>(verts_[v].inc.size()); ++i) {
      EdgeId e = verts_[v].inc[i];
      FVS_CHECK(has_edge(e), "incidence list references dead edge");
      const EdgeSlot& s = edges_[e];
      FVS_CHECK(s.u == v || s.v == v, "incidence list references foreign edge");
      FVS_CHECK((s.u == v && s.pos_u == i) || (s.v == v && s.pos_v == i),
                "edge position out of sync");
      if (s.u == s.v) ++loops;
    }
    FVS_CHECK(verts_[v].loops * 2 == loops, "loop count out of sync");
  }
  for (EdgeId e = 0; e < edge_id_bound(); ++e) {
    if (!edges_[e].alive) continue;
    ++m;
    FVS_CHECK(has_vertex(edges_[e].u) && has_vertex(edges_[e].v), "edge with dead endpoint");
  }
  FVS_CHECK(n == n_ && m == m_, "vertex/edge counters out of sync");
  FVS_CHECK(degree_sum == 2LL * m_, "degree sum != 2m");
}

std::vector<std::vector<EdgeId>> incidence_sorted_by_edge(const MultiGraph& g) {
  std::vector<std::vector<EdgeId>> inc(g.vertex_id_bound());
  for (EdgeId e = 0; e < g.edge_id_bound(); ++e) {
    if (!g.has_edge(e)) continue;
    auto [u, v] = g.endpoints(e);
    inc[u].push_back(e);
    inc[v].push_back(e);  // self-loop: twice in the same list
  }
  return inc;
}

}  // namespace fvs
