#include "fvs/kernel.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "fvs/check.hpp"

namespace fvs {

void cycle_cover_reduction_inplace(MultiGraph& g, VertexId s, const CycleCover& x) {
  require(g.has_vertex(s), "cycle_cover_reduction: unknown source vertex");
  require(static_cast<int>(x.x_doubled.size()) >= g.vertex_id_bound(),
          "cycle_cover_reduction: cover not sized to graph");
  require(x.x_doubled[s] == 0, "cycle_cover_reduction: x(s) must be 0");
  for (EdgeId e : g.edges())
    require(!g.is_self_loop(e), "cycle_cover_reduction: graph must have no self-loops");

  std::vector<VertexId> heavy;  // X = x^{-1}(1)
  for (VertexId v : g.vertices()) {
    require(x.x_doubled[v] >= 0 && x.x_doubled[v] <= 2,
            "cycle_cover_reduction: x is not half-integral");
    if (v != s && x.x_doubled[v] == 2) heavy.push_back(v);
  }

  // Components of G - X - s, before any mutation.
  std::vector<VertexId> avoid = heavy;
  avoid.push_back(s);
  const auto comps = g.components_avoiding(avoid);
  std::vector<int> comp_of(g.vertex_id_bound(), -1);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    for (VertexId v : comps[i].vertices) comp_of[v] = i;

  // A tree component with exactly one edge to s loses that edge; such edges
  // are exactly the bridges of G - X from s into tree components.
  std::vector<int> s_edges(comps.size(), 0);
  std::vector<EdgeId> s_edge(comps.size(), -1);
  for (EdgeId e : g.incident_edges(s)) {
    const int c = comp_of[g.other_endpoint(e, s)];
    if (c < 0) continue;  // neighbor is in X
    ++s_edges[c];
    s_edge[c] = e;
  }
  std::vector<EdgeId> bridges;
  for (int i = 0; i < static_cast<int>(comps.size()); ++i)
    if (comps[i].tree && s_edges[i] == 1) bridges.push_back(s_edge[i]);

  for (VertexId v : heavy) {
    // set the s-v multiplicity to exactly 2
    std::vector<EdgeId> parallel;
    for (EdgeId e : g.incident_edges(v))
      if (g.other_endpoint(e, v) == s) parallel.push_back(e);
    std::sort(parallel.begin(), parallel.end());
    while (parallel.size() > 2) {
      g.remove_edge(parallel.back());
      parallel.pop_back();
    }
    while (parallel.size() < 2) parallel.push_back(g.add_edge(s, v));
  }
  for (EdgeId e : bridges) g.remove_edge(e);

  FVS_CHECK(g.degree(s) <= x.size_doubled,
            "degree of s must drop to at most twice the cover size");
}

MultiGraph cycle_cover_reduction(const MultiGraph& g, VertexId s, const CycleCover& x) {
  MultiGraph out = g;
  cycle_cover_reduction_inplace(out, s, x);
  return out;
}

KernelOutcome kernelize(const MultiGraph& g0, int k0) {
  require(k0 >= 0, "kernelize: k must be nonnegative");
  KernelOutcome out;
  MultiGraph g = g0;
  int k = k0;
  const long long bound = kernel_iteration_bound(k0);

  for (;;) {
    ++out.stats.iterations;
    FVS_CHECK(out.stats.iterations <= bound, "kernel iteration bound exceeded");

    apply_basic_reductions_inplace(g, k, out.log);
    if (k < 0) {
      out.verdict = KernelOutcome::Verdict::TriviallyNo;
      out.k_prime = 0;
      return out;
    }
    const long long kk = k;
    if (g.num_vertices() <= 2 * kk * kk + kk && g.num_edges() <= 4 * kk * kk) {
      out.verdict = KernelOutcome::Verdict::Reduced;
      out.k_prime = k;
      FVS_CHECK(k <= k0, "parameter must not grow");
      out.graph = std::move(g);
      return out;
    }
    int max_degree = 0;
    for (VertexId v : g.vertices()) max_degree = std::max(max_degree, g.degree(v));
    if (max_degree <= 2 * k) {
      // every degree is in [3, 2k] but the graph is too large, so fvs > k
      out.verdict = KernelOutcome::Verdict::TriviallyNo;
      out.k_prime = 0;
      return out;
    }

    // Double-edge rules. Multiplicities are 1 or 2 after the basic reductions,
    // so doubles are exactly the pairs seen twice.
    std::unordered_map<std::uint64_t, int> pair_count;
    for (EdgeId e : g.edges()) {
      auto [u, v] = g.endpoints(e);
      const std::uint64_t key =
          (static_cast<std::uint64_t>(static_cast<std::uint32_t>(std::min(u, v))) << 32) |
          static_cast<std::uint32_t>(std::max(u, v));
      ++pair_count[key];
    }
    long long total_doubles = 0;
    std::vector<int> doubles_at(g.vertex_id_bound(), 0);
    for (const auto& [key, c] : pair_count) {
      FVS_CHECK(c <= 2, "multiplicity above 2 after basic reductions");
      if (c != 2) continue;
      ++total_doubles;
      ++doubles_at[static_cast<VertexId>(key >> 32)];
      ++doubles_at[static_cast<VertexId>(key & 0xffffffffu)];
    }
    VertexId heavy = -1;
    for (VertexId v : g.vertices())
      if (doubles_at[v] > k) {
        heavy = v;
        break;
      }
    if (heavy >= 0) {
      // a double edge puts one endpoint into any solution; more than k of
      // them pin this vertex
      out.log.forced.push_back(heavy);
      ++out.log.k_decrements;
      g.remove_vertex(heavy);
      --k;
      continue;
    }
    if (total_doubles > kk * kk) {
      out.verdict = KernelOutcome::Verdict::TriviallyNo;
      out.k_prime = 0;
      return out;
    }

    VertexId s = -1;
    for (VertexId v : g.vertices())
      if (g.degree(v) > 2 * k) {
        s = v;
        break;
      }
    FVS_CHECK(s >= 0, "a vertex of degree > 2k must exist here");

    ++out.stats.covers_computed;
    CoverResult r = min_cycle_cover(g, s, 2 * k);
    if (r.exceeds_budget) {
      // every solution of size <= k contains s
      ++out.stats.s_removals;
      out.log.forced.push_back(s);
      ++out.log.k_decrements;
      g.remove_vertex(s);
      --k;
      continue;
    }

    // min degree >= 3 and 2 x(V) <= 2k < d(s) force some x = 1 vertex
    bool has_one = false;
    for (VertexId v : g.vertices())
      if (v != s && r.cover->x_doubled[v] == 2) {
        has_one = true;
        break;
      }
    FVS_CHECK(has_one, "a minimum cover smaller than half the degree of s must use weight 1");

    ++out.stats.reductions_applied;
    cycle_cover_reduction_inplace(g, s, *r.cover);
    FVS_CHECK(g.degree(s) <= 2 * k, "degree of s above 2k after the reduction");
  }
}

}  // namespace fvs
