#include "fvs/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "fvs/check.hpp"

namespace fvs {

bool is_forest_excluding(const MultiGraph& g, const std::vector<VertexId>& removed) {
  std::vector<char> gone(g.vertex_id_bound(), 0);
  for (VertexId v : removed)
    if (v >= 0 && v < g.vertex_id_bound()) gone[v] = 1;

  std::vector<int> parent(g.vertex_id_bound());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (EdgeId e = 0; e < g.edge_id_bound(); ++e) {
    if (!g.has_edge(e)) continue;
    auto [u, v] = g.endpoints(e);
    if (gone[u] || gone[v]) continue;
    if (u == v) return false;
    const int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

namespace {

bool pick_witness(const MultiGraph& g, const std::vector<VertexId>& ids, std::size_t start,
                  int remaining, std::vector<VertexId>& chosen) {
  if (remaining == 0) return is_forest_excluding(g, chosen);
  for (std::size_t i = start; i + remaining <= ids.size(); ++i) {
    chosen.push_back(ids[i]);
    if (pick_witness(g, ids, i + 1, remaining - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

FvsResult brute_fvs(const MultiGraph& g) {
  require(g.num_vertices() <= 16, "brute_fvs: graph too large (n <= 16)");
  const auto ids = g.vertices();
  std::vector<VertexId> chosen;
  for (int size = 0; size <= g.num_vertices(); ++size) {
    chosen.clear();
    if (pick_witness(g, ids, 0, size, chosen)) return {size, chosen};
  }
  throw internal_error("brute_fvs: removing all vertices must leave a forest");
}

std::optional<SCycle> find_violating_s_cycle(const MultiGraph& g, VertexId s,
                                             const CycleCover& x, long long node_budget) {
  require(g.has_vertex(s), "find_violating_s_cycle: unknown source vertex");
  require(static_cast<int>(x.x_doubled.size()) >= g.vertex_id_bound(),
          "find_violating_s_cycle: cover not sized to graph");

  const auto inc = incidence_sorted_by_edge(g);
  std::vector<signed char> used(g.edge_id_bound(), 0);
  SCycle walk;
  walk.vertices.push_back(s);
  long long nodes = 0;

  auto dfs = [&](auto&& self, VertexId cur, EdgeId last, int weight_doubled) -> bool {
    if (++nodes > node_budget)
      throw internal_error("find_violating_s_cycle: node budget exceeded");
    for (EdgeId e : inc[cur]) {
      if (e == last) continue;  // no U-turns
      if (used[e] >= 2) continue;
      const VertexId nxt = g.other_endpoint(e, cur);
      if (nxt == s) {
        if (weight_doubled < 2) {  // found a cycle with x(V(C)) < 1
          walk.edges.push_back(e);
          walk.vertices.push_back(s);
          return true;
        }
        continue;
      }
      const int nw = weight_doubled + x.x_doubled[nxt];
      if (nw >= 2) continue;  // the walk can no longer violate the cover
      ++used[e];
      walk.edges.push_back(e);
      walk.vertices.push_back(nxt);
      if (self(self, nxt, e, nw)) return true;
      walk.edges.pop_back();
      walk.vertices.pop_back();
      --used[e];
    }
    return false;
  };
  if (dfs(dfs, s, -1, 0)) return walk;
  return std::nullopt;
}

CycleCover brute_min_cover(const MultiGraph& g, VertexId s) {
  require(g.num_vertices() <= 8, "brute_min_cover: graph too large (n <= 8)");
  require(g.has_vertex(s), "brute_min_cover: unknown source vertex");
  require(!g.has_self_loop_at(s), "brute_min_cover: no cover exists with a self-loop at s");

  std::vector<VertexId> vars;
  for (VertexId v : g.vertices())
    if (v != s) vars.push_back(v);

  CycleCover x;
  x.x_doubled.assign(g.vertex_id_bound(), 0);

  auto enumerate = [&](auto&& self, std::size_t i, int rem) -> bool {
    if (i == vars.size()) return rem == 0 && !find_violating_s_cycle(g, s, x).has_value();
    if (rem > 2 * static_cast<int>(vars.size() - i)) return false;
    for (int d = 0; d <= 2 && d <= rem; ++d) {
      x.x_doubled[vars[i]] = static_cast<signed char>(d);
      if (self(self, i + 1, rem - d)) return true;
    }
    x.x_doubled[vars[i]] = 0;
    return false;
  };

  const int max_total = 2 * static_cast<int>(vars.size());
  for (int total = 0; total <= max_total; ++total) {
    if (enumerate(enumerate, 0, total)) {
      x.size_doubled = total;
      return x;
    }
  }
  // Setting every vertex to 1 covers any s-cycle (each contains a vertex != s
  // when s has no self-loop), so the loop above cannot fall through.
  throw internal_error("brute_min_cover: no feasible cover found");
}

bool verify_packing(const MultiGraph& g, VertexId s, const ExplicitPacking& p) {
  if (!g.has_vertex(s)) return false;
  std::vector<long long> load(g.vertex_id_bound(), 0);
  std::vector<int> edge_use(g.edge_id_bound(), 0);
  for (const WeightedCycle& c : p) {
    const std::size_t l = c.edges.size();
    if (l < 1 || c.vertices.size() != l + 1) return false;
    if (c.vertices.front() != s || c.vertices.back() != s) return false;
    for (std::size_t i = 1; i + 1 <= l; ++i)
      if (c.vertices[i] == s) return false;
    for (std::size_t i = 0; i < l; ++i) {
      const EdgeId e = c.edges[i];
      if (e < 0 || !g.has_edge(e)) return false;
      auto [a, b] = g.endpoints(e);
      if (!((a == c.vertices[i] && b == c.vertices[i + 1]) ||
            (b == c.vertices[i] && a == c.vertices[i + 1])))
        return false;
      if (i + 1 < l && c.edges[i + 1] == e) return false;  // U-turn
    }
    for (EdgeId e : c.edges)
      if (++edge_use[e] > 2) return false;
    for (EdgeId e : c.edges) edge_use[e] = 0;
    for (std::size_t i = 1; i + 1 <= l; ++i) load[c.vertices[i]] += c.weight.doubled();
  }
  for (VertexId v = 0; v < g.vertex_id_bound(); ++v)
    if (load[v] > 2) return false;
  return true;
}

}  // namespace fvs
