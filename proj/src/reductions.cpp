#include "fvs/reductions.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "fvs/check.hpp"

namespace fvs {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

struct Reducer {
  MultiGraph& g;
  int& k;
  ReductionLog& log;
  std::unordered_map<std::uint64_t, int> mult;
  std::vector<VertexId> vqueue;
  std::vector<std::pair<VertexId, VertexId>> pqueue;

  void remove_edge_tracked(EdgeId e) {
    auto [u, v] = g.endpoints(e);
    g.remove_edge(e);
    ++log.edges_touched;
    --mult[pair_key(u, v)];
    vqueue.push_back(u);
    if (v != u) vqueue.push_back(v);
  }

  void remove_vertex_tracked(VertexId v) {
    while (g.degree(v) > 0) remove_edge_tracked(g.incident_edges(v).back());
    g.remove_vertex(v);
  }

  EdgeId add_edge_tracked(VertexId u, VertexId v) {
    const EdgeId e = g.add_edge(u, v);
    ++log.edges_touched;
    const int c = ++mult[pair_key(u, v)];
    if (u != v && c >= 3) pqueue.emplace_back(std::min(u, v), std::max(u, v));
    if (u == v) vqueue.push_back(u);  // fresh self-loop
    return e;
  }

  void process_pair(VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) return;
    const auto it = mult.find(pair_key(u, v));
    const int c = it == mult.end() ? 0 : it->second;
    if (c <= 2) return;
    // rule 4: keep the two smallest-id parallel edges
    const VertexId probe = g.degree(u) <= g.degree(v) ? u : v;
    const VertexId want = probe == u ? v : u;
    std::vector<EdgeId> parallel;
    for (EdgeId e : g.incident_edges(probe)) {
      ++log.edges_touched;
      if (g.other_endpoint(e, probe) == want) parallel.push_back(e);
    }
    FVS_CHECK(static_cast<int>(parallel.size()) == c, "pair multiplicity out of sync");
    std::sort(parallel.begin(), parallel.end());
    for (std::size_t i = 2; i < parallel.size(); ++i) remove_edge_tracked(parallel[i]);
  }

  void process_vertex(VertexId v) {
    if (!g.has_vertex(v)) return;
    ++log.edges_touched;
    if (g.has_self_loop_at(v)) {  // rule 1
      log.forced.push_back(v);
      ++log.k_decrements;
      --k;
      remove_vertex_tracked(v);
      return;
    }
    // degree decisions are made on loop-free vertices only (checked above)
    const int d = g.degree(v);
    if (d >= 3) return;
    if (d <= 1) {  // rule 2
      remove_vertex_tracked(v);
      return;
    }
    // rule 3: bypass the degree-2 vertex
    const EdgeId e1 = g.incident_edges(v)[0];
    const EdgeId e2 = g.incident_edges(v)[1];
    const VertexId a = g.other_endpoint(e1, v);
    const VertexId b = g.other_endpoint(e2, v);
    remove_vertex_tracked(v);
    const EdgeId bypass = add_edge_tracked(a, b);
    log.smoothed.emplace_back(v, bypass);
  }

  void run() {
    for (EdgeId e : g.edges()) {
      auto [u, v] = g.endpoints(e);
      ++log.edges_touched;
      const int c = ++mult[pair_key(u, v)];
      if (u != v && c == 3) pqueue.emplace_back(std::min(u, v), std::max(u, v));
    }
    const auto verts = g.vertices();
    for (auto it = verts.rbegin(); it != verts.rend(); ++it) vqueue.push_back(*it);
    while (!pqueue.empty() || !vqueue.empty()) {
      if (!pqueue.empty()) {
        auto [u, v] = pqueue.back();
        pqueue.pop_back();
        process_pair(u, v);
      } else {
        const VertexId v = vqueue.back();
        vqueue.pop_back();
        process_vertex(v);
      }
    }
  }
};

}  // namespace

void apply_basic_reductions_inplace(MultiGraph& g, int& k, ReductionLog& log) {
  Reducer r{g, k, log, {}, {}, {}};
  r.run();
  for (VertexId v : g.vertices()) {
    FVS_CHECK(!g.has_self_loop_at(v), "reduced graph has a self-loop");
    FVS_CHECK(g.degree(v) >= 3, "reduced graph has a vertex of degree < 3");
  }
  for (const auto& [key, c] : r.mult)
    FVS_CHECK(c <= 2, "reduced graph has a pair with multiplicity > 2");
  FVS_CHECK(log.k_decrements == static_cast<int>(log.forced.size()),
            "k decrement count out of sync with forced list");
}

BasicReductionResult apply_basic_reductions(const MultiGraph& g, int k) {
  BasicReductionResult r{g, k, {}};
  apply_basic_reductions_inplace(r.graph, r.k_prime, r.log);
  return r;
}

}  // namespace fvs
