#include "fvs/cyclecover.hpp"

#include <algorithm>
#include <array>

#include "fvs/check.hpp"

namespace fvs {

BasicPacking::BasicPacking(const MultiGraph& g, VertexId s) : g_(&g), s_(s) {
  require(g.has_vertex(s), "BasicPacking: unknown source vertex");
  f_.assign(g.edge_id_bound(), 0);
  ones_.assign(g.vertex_id_bound(), 0);
  halves_.assign(g.vertex_id_bound(), 0);
}

VertexType BasicPacking::type(VertexId v) const {
  FVS_CHECK(v != s_, "type of the source vertex is undefined");
  const int o = ones_[v], h = halves_[v];
  if (o == 0 && h == 0) return VertexType::O;
  if (o == 2 && h == 0) return VertexType::I;
  if (o == 0 && h == 2) return VertexType::H;
  if (o == 1 && h == 2) return VertexType::T;
  throw internal_error("vertex " + std::to_string(v) + " matches no packing type (ones=" +
                       std::to_string(o) + ", halves=" + std::to_string(h) + ")");
}

void BasicPacking::set_value(EdgeId e, Half value) {
  require(g_->has_edge(e), "set_value: unknown edge");
  const int d_old = f_[e];
  const int d_new = value.doubled();
  if (d_old == d_new) return;
  auto [u, v] = g_->endpoints(e);
  const bool at_s = u == s_ || v == s_;
  FVS_CHECK(!(at_s && d_new == 1), "edges at s must stay integral");
  auto adjust = [&](VertexId w, int d, int delta) {
    if (d == 2) ones_[w] += delta;
    if (d == 1) halves_[w] += delta;
  };
  adjust(u, d_old, -1);
  adjust(v, d_old, -1);
  adjust(u, d_new, +1);
  adjust(v, d_new, +1);
  if (at_s) {
    if (d_old == 2) --size_doubled_;
    if (d_new == 2) ++size_doubled_;
  }
  f_[e] = static_cast<signed char>(d_new);
}

namespace {

struct HalfCycle {
  std::vector<VertexId> vertices;  // v_0 .. v_{L-1}
  std::vector<EdgeId> edges;       // edges[j] joins vertices[j] and vertices[(j+1)%L]
};

std::array<EdgeId, 2> half_edges_at(const BasicPacking& f, VertexId v) {
  std::array<EdgeId, 2> out{-1, -1};
  int cnt = 0;
  for (EdgeId e : f.graph().incident_edges(v)) {
    if (f.value_doubled(e) != 1) continue;
    FVS_CHECK(cnt < 2, "vertex with more than two half edges");
    out[cnt++] = e;
  }
  FVS_CHECK(cnt == 2, "type-H/T vertex without exactly two half edges");
  if (out[0] > out[1]) std::swap(out[0], out[1]);
  return out;
}

// Walks the value-1/2 edges around from v0, starting along the incident half
// edge with the smaller id.
HalfCycle trace_half_cycle(const BasicPacking& f, VertexId v0) {
  const MultiGraph& g = f.graph();
  HalfCycle c;
  VertexId cur = v0;
  EdgeId cur_e = half_edges_at(f, v0)[0];
  for (;;) {
    c.vertices.push_back(cur);
    c.edges.push_back(cur_e);
    FVS_CHECK(c.edges.size() <= static_cast<std::size_t>(g.num_edges()),
              "half cycle trace does not close");
    VertexId nxt = g.other_endpoint(cur_e, cur);
    if (nxt == v0) break;
    auto he = half_edges_at(f, nxt);
    cur_e = he[0] == cur_e ? he[1] : he[0];
    cur = nxt;
  }
  return c;
}

// Positions of the split points t_0, ..., t_{q-1} on the half cycle of the
// walk's end vertex: position 0 always (the end vertex itself), plus every
// later type-T vertex. For a type-H end this is {v_l} + type-T's, for a
// type-T end exactly the type-T's.
std::vector<std::size_t> split_positions(const BasicPacking& f, const HalfCycle& c) {
  std::vector<std::size_t> tpos{0};
  for (std::size_t j = 1; j < c.vertices.size(); ++j)
    if (f.type(c.vertices[j]) == VertexType::T) tpos.push_back(j);
  return tpos;
}

}  // namespace

SearchResult find_augmenting_walk(const BasicPacking& f) {
  return find_augmenting_walk(f, incidence_sorted_by_edge(f.graph()));
}

SearchResult find_augmenting_walk(const BasicPacking& f,
                                  const std::vector<std::vector<EdgeId>>& inc) {
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  SearchResult res;
  PrevTable& t = res.prev;
  t.prev.assign(g.vertex_id_bound(), PrevTable::npos);
  t.depth.assign(g.vertex_id_bound(), -1);
  t.depth[s] = 0;

  auto parent = [&](VertexId v) { return g.other_endpoint(t.prev[v], v); };
  // Path from s down to v along the search tree.
  auto chain_from_root = [&](VertexId v, AugmentingWalk& w) {
    while (v != s) {
      w.vertices.push_back(v);
      w.edges.push_back(t.prev[v]);
      v = parent(v);
    }
    w.vertices.push_back(s);
    std::reverse(w.vertices.begin(), w.vertices.end());
    std::reverse(w.edges.begin(), w.edges.end());
  };

  std::vector<VertexId> stack{s};
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    const bool u_type_I = u != s && f.type(u) == VertexType::I;
    const int f_prev_u = u != s ? f.value_doubled(t.prev[u]) : 0;
    for (EdgeId e : inc[u]) {
      if (e == t.prev[u]) continue;
      const int fe = f.value_doubled(e);
      const VertexId v = g.other_endpoint(e, u);
      if ((u == s || v == s) && fe == 2) continue;
      if (u_type_I && f_prev_u == 0 && fe == 0) continue;
      if (v == s) {
        // The root scans all of delta(s) before any other vertex runs, so an
        // edge back into s that passes the skips above cannot exist.
        FVS_CHECK(false, "unskipped edge into the root");
      }
      const VertexType tv = f.type(v);
      if (tv == VertexType::H || tv == VertexType::T) {
        t.prev[v] = e;
        t.depth[v] = t.depth[u] + 1;
        AugmentingWalk w;
        chain_from_root(v, w);
        w.h = w.edges.size();
        res.walk = std::move(w);
        return res;
      }
      if (t.depth[v] < 0) {
        t.prev[v] = e;
        t.depth[v] = t.depth[u] + 1;
        stack.push_back(v);
        continue;
      }
      if (tv == VertexType::O || f.value_doubled(t.prev[v]) + fe >= 2) {
        // Close the walk: down from s to u, jump to v, climb to the lowest
        // common ancestor w. The flip prefix ends at w's first occurrence.
        VertexId a = u, b = v;
        while (t.depth[a] > t.depth[b]) a = parent(a);
        while (t.depth[b] > t.depth[a]) b = parent(b);
        while (a != b) {
          a = parent(a);
          b = parent(b);
        }
        const VertexId w_lca = a;
        AugmentingWalk w;
        chain_from_root(u, w);
        w.vertices.push_back(v);
        w.edges.push_back(e);
        for (VertexId z = v; z != w_lca;) {
          w.edges.push_back(t.prev[z]);
          z = parent(z);
          w.vertices.push_back(z);
        }
        w.h = w_lca == s ? w.edges.size() : static_cast<std::size_t>(t.depth[w_lca]);
        res.walk = std::move(w);
        return res;
      }
      // Otherwise v is type-I with both labels 0; the edge is unusable.
    }
  }
  return res;
}

void augment(BasicPacking& f, const AugmentingWalk& w) {
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  const std::size_t l = w.edges.size();
  require(l >= 1 && w.vertices.size() == l + 1, "augment: malformed walk");
  require(w.vertices.front() == s, "augment: walk must start at s");
  for (std::size_t i = 0; i < l; ++i) {
    require(g.has_edge(w.edges[i]), "augment: walk uses unknown edge");
    auto [a, b] = g.endpoints(w.edges[i]);
    require((a == w.vertices[i] && b == w.vertices[i + 1]) ||
                (b == w.vertices[i] && a == w.vertices[i + 1]),
            "augment: walk edges and vertices disagree");
  }
  require(f.value_doubled(w.edges.front()) == 0, "augment: first edge must carry 0");
  require(w.h >= 1 && w.h <= l, "augment: bad flip prefix");

  const VertexId last = w.vertices.back();
  const bool closes_at_s = last == s;
  const VertexType end_type = closes_at_s ? VertexType::O : f.type(last);
  const bool fresh_end =
      !closes_at_s && (end_type == VertexType::H || end_type == VertexType::T);
  if (closes_at_s || fresh_end) {
    require(w.h == l, "augment: flip prefix must cover the whole walk");
  } else {
    require(w.h < l && w.vertices[w.h] == last,
            "augment: flip prefix must end at the revisited vertex");
  }

  // For an H/T ending, capture the half-integral cycle and its split points
  // before relabeling anything: the flips touch no value-1/2 edge, but they
  // do change the end vertex's type.
  HalfCycle cyc;
  std::vector<std::size_t> tpos;
  if (fresh_end) {
    cyc = trace_half_cycle(f, last);
    tpos = split_positions(f, cyc);
    // q is even exactly when the end vertex is type-H
    FVS_CHECK((tpos.size() % 2 == 0) == (end_type == VertexType::H),
              "half cycle split parity");
  }

  const int before = f.size_doubled();

  for (std::size_t i = 0; i < w.h; ++i) {
    const int d = f.value_doubled(w.edges[i]);
    FVS_CHECK(d == 0 || d == 2, "flip prefix touched a half edge");
    f.set_value(w.edges[i], d == 0 ? Half::one() : Half::zero());
  }

  if (!closes_at_s) {
    if (!fresh_end) {
      // Revisited type-O/I end: the closing tail becomes a half cycle.
      for (std::size_t i = w.h; i < l; ++i) f.set_value(w.edges[i], Half::half());
    } else {
      // Repartition the old half cycle at the split points: segments
      // alternate 0, 1, 0, ... starting at the end vertex.
      const std::size_t q = tpos.size();
      const std::size_t L = cyc.edges.size();
      for (std::size_t i = 0; i < q; ++i) {
        const Half val = i % 2 == 1 ? Half::one() : Half::zero();
        const std::size_t from = tpos[i];
        std::size_t steps = (tpos[(i + 1) % q] + L - from) % L;
        if (steps == 0) steps = L;  // q == 1: the whole cycle
        for (std::size_t j = 0; j < steps; ++j)
          f.set_value(cyc.edges[(from + j) % L], val);
      }
    }
  }

  FVS_CHECK(f.size_doubled() - before == (closes_at_s ? 2 : 1), "augmentation size step");
#ifndef NDEBUG
  {
    const std::string err = validate_basic_packing(f);
    FVS_CHECK(err.empty(), "augment produced an invalid packing: " + err);
  }
#endif
}

CycleCover extract_cover(const BasicPacking& f, const PrevTable& t) {
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  FVS_CHECK(t.prev.size() == static_cast<std::size_t>(g.vertex_id_bound()) &&
                t.depth.size() == t.prev.size(),
            "prev table not sized to graph");

  CycleCover x;
  x.x_doubled.assign(g.vertex_id_bound(), 0);

  auto bump_half = [&](VertexId v) {
    FVS_CHECK(x.x_doubled[v] <= 1, "cover value bumped past 1");
    x.x_doubled[v] += 1;
    x.size_doubled += 1;
  };

  std::vector<EdgeId> roots;
  for (EdgeId e : g.incident_edges(s))
    if (f.value_doubled(e) == 2) roots.push_back(e);
  std::sort(roots.begin(), roots.end());

  std::vector<char> on_walk(g.edge_id_bound(), 0);

  for (EdgeId e0 : roots) {
    // Follow value-1 edges from s; the trace is forced since interior
    // vertices are type-I with exactly two value-1 edges. It ends back at s
    // (a cycle) or at a type-T vertex (a path).
    std::vector<VertexId> verts;
    std::vector<EdgeId> es{e0};
    VertexId cur = g.other_endpoint(e0, s);
    EdgeId in_e = e0;
    bool is_cycle = false;
    for (;;) {
      verts.push_back(cur);
      const VertexType tc = f.type(cur);
      if (tc == VertexType::T) break;
      FVS_CHECK(tc == VertexType::I, "value-1 trace through a vertex without two ones");
      EdgeId nxt = -1;
      for (EdgeId e : g.incident_edges(cur)) {
        if (e != in_e && f.value_doubled(e) == 2) {
          nxt = e;
          break;
        }
      }
      FVS_CHECK(nxt >= 0, "type-I vertex missing its second value-1 edge");
      es.push_back(nxt);
      const VertexId nv = g.other_endpoint(nxt, cur);
      if (nv == s) {
        is_cycle = true;
        break;
      }
      in_e = nxt;
      cur = nv;
    }

    if (!is_cycle) {
      // A reachable type-T endpoint would have ended the search with a walk.
      FVS_CHECK(!t.reachable(verts.back()), "reachable type-T endpoint after failed search");
      bump_half(verts.front());
      continue;
    }

    const bool reach = t.reachable(verts.front());
#ifndef NDEBUG
    for (VertexId v : verts)
      FVS_CHECK(t.reachable(v) == reach, "mixed reachability on a value-1 cycle");
#endif
    if (!reach) {
      bump_half(verts.front());
      continue;
    }
    // Reachable value-1 cycle: exactly one vertex is parented from outside
    // the cycle; it receives the full weight.
    for (EdgeId e : es) on_walk[e] = 1;
    VertexId unique_v = -1;
    int cnt = 0;
    for (VertexId v : verts) {
      const EdgeId pe = t.prev[v];
      FVS_CHECK(pe != PrevTable::npos, "reachable cycle vertex without a parent edge");
      if (!on_walk[pe]) {
        unique_v = v;
        ++cnt;
      }
    }
    for (EdgeId e : es) on_walk[e] = 0;
    FVS_CHECK(cnt == 1, "value-1 cycle must have exactly one externally parented vertex");
    if (x.x_doubled[unique_v] < 2) {
      x.size_doubled += 2 - x.x_doubled[unique_v];
      x.x_doubled[unique_v] = 2;
    }
  }

  FVS_CHECK(x.size_doubled == f.size_doubled(), "cover size must equal packing size");
  return x;
}

CoverResult min_cycle_cover(const MultiGraph& g, VertexId s, int budget_doubled) {
  require(g.has_vertex(s), "min_cycle_cover: unknown source vertex");
  require(budget_doubled >= 0, "min_cycle_cover: negative budget");
  for (EdgeId e = 0; e < g.edge_id_bound(); ++e)
    if (g.has_edge(e))
      require(!g.is_self_loop(e), "min_cycle_cover: graph must have no self-loops");

  BasicPacking f(g, s);
  const auto inc = incidence_sorted_by_edge(g);
  for (;;) {
    if (f.size_doubled() > budget_doubled)
      return CoverResult{true, std::nullopt, std::move(f)};
    SearchResult r = find_augmenting_walk(f, inc);
    if (r.walk) {
      augment(f, *r.walk);
    } else {
      CycleCover x = extract_cover(f, r.prev);
      return CoverResult{false, std::move(x), std::move(f)};
    }
  }
}

namespace {

struct OnesPath {
  std::vector<VertexId> vertices;  // t, ..., endpoint (s or another type-T vertex)
  std::vector<EdgeId> edges;
};

// Follows value-1 edges from a type-T vertex until s or another type-T vertex.
OnesPath trace_ones_from(const BasicPacking& f, VertexId v0) {
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  OnesPath p;
  p.vertices.push_back(v0);
  EdgeId cur = -1;
  for (EdgeId e : g.incident_edges(v0))
    if (f.value_doubled(e) == 2) {
      FVS_CHECK(cur < 0, "type-T vertex with two value-1 edges");
      cur = e;
    }
  FVS_CHECK(cur >= 0, "type-T vertex without a value-1 edge");
  VertexId at = v0;
  for (;;) {
    p.edges.push_back(cur);
    const VertexId nxt = g.other_endpoint(cur, at);
    p.vertices.push_back(nxt);
    if (nxt == s) break;
    const VertexType tn = f.type(nxt);
    if (tn == VertexType::T) break;
    FVS_CHECK(tn == VertexType::I, "value-1 path through a vertex without two ones");
    EdgeId out = -1;
    for (EdgeId e : g.incident_edges(nxt))
      if (e != cur && f.value_doubled(e) == 2) {
        out = e;
        break;
      }
    FVS_CHECK(out >= 0, "type-I vertex missing its second value-1 edge");
    cur = out;
    at = nxt;
  }
  return p;
}

struct WalkBuilder {
  WeightedCycle c;
  explicit WalkBuilder(VertexId start) { c.vertices.push_back(start); }
  void step(EdgeId e, VertexId to) {
    c.edges.push_back(e);
    c.vertices.push_back(to);
  }
  // Appends a OnesPath reversed: from its endpoint back to its head.
  void append_reversed(const OnesPath& p) {
    for (std::size_t j = p.edges.size(); j-- > 0;) step(p.edges[j], p.vertices[j]);
  }
  void append_forward(const OnesPath& p) {
    for (std::size_t j = 0; j < p.edges.size(); ++j) step(p.edges[j], p.vertices[j + 1]);
  }
};

}  // namespace

ExplicitPacking explicit_packing(const BasicPacking& f0) {
  BasicPacking f = f0;
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  ExplicitPacking out;

  // Reroute: clear every value-1 path that joins two type-T vertices (both
  // ends become type-H, the interior becomes type-O); afterwards every
  // value-1 path from a type-T vertex reaches s.
  for (VertexId v = 0; v < g.vertex_id_bound(); ++v) {
    if (!g.has_vertex(v) || v == s) continue;
    if (f.ones_at(v) != 1 || f.halves_at(v) != 2) continue;
    const OnesPath p = trace_ones_from(f, v);
    if (p.vertices.back() != s)
      for (EdgeId e : p.edges) f.set_value(e, Half::zero());
  }

  // Peel the value-1 structure hanging off s, smallest root edge first.
  std::vector<EdgeId> roots;
  for (EdgeId e : g.incident_edges(s)) roots.push_back(e);
  std::sort(roots.begin(), roots.end());

  for (EdgeId e0 : roots) {
    if (f.value_doubled(e0) != 2) continue;
    std::vector<VertexId> verts;
    std::vector<EdgeId> es{e0};
    VertexId cur = g.other_endpoint(e0, s);
    EdgeId in_e = e0;
    bool is_cycle = false;
    for (;;) {
      verts.push_back(cur);
      const VertexType tc = f.type(cur);
      if (tc == VertexType::T) break;
      FVS_CHECK(tc == VertexType::I, "value-1 trace through a vertex without two ones");
      EdgeId nxt = -1;
      for (EdgeId e : g.incident_edges(cur)) {
        if (e != in_e && f.value_doubled(e) == 2) {
          nxt = e;
          break;
        }
      }
      FVS_CHECK(nxt >= 0, "type-I vertex missing its second value-1 edge");
      es.push_back(nxt);
      const VertexId nv = g.other_endpoint(nxt, cur);
      if (nv == s) {
        is_cycle = true;
        break;
      }
      in_e = nxt;
      cur = nv;
    }

    if (is_cycle) {
      WalkBuilder b(s);
      for (std::size_t i = 0; i < es.size(); ++i)
        b.step(es[i], i + 1 < es.size() ? verts[i] : s);
      b.c.weight = Half::one();
      for (EdgeId e : es) f.set_value(e, Half::zero());
      out.push_back(std::move(b.c));
      continue;
    }

    // Path to a type-T vertex: pack its half cycle. Each split vertex t_i is
    // joined to s by a value-1 path P_i; consecutive splits plus their paths
    // form s-cycles of weight 1/2.
    const VertexId tv = verts.back();
    const HalfCycle cyc = trace_half_cycle(f, tv);
    std::vector<std::size_t> tpos{0};
    for (std::size_t j = 1; j < cyc.vertices.size(); ++j)
      if (f.type(cyc.vertices[j]) == VertexType::T) tpos.push_back(j);
    const std::size_t q = tpos.size();
    const std::size_t L = cyc.edges.size();

    std::vector<OnesPath> paths(q);
    for (std::size_t i = 0; i < q; ++i) {
      paths[i] = trace_ones_from(f, cyc.vertices[tpos[i]]);
      FVS_CHECK(paths[i].vertices.back() == s, "split vertex not joined to s by value-1 edges");
    }

    auto cycle_segment = [&](WalkBuilder& b, std::size_t from, std::size_t steps) {
      std::size_t pos = from;
      for (std::size_t j = 0; j < steps; ++j) {
        b.step(cyc.edges[pos], cyc.vertices[(pos + 1) % L]);
        pos = (pos + 1) % L;
      }
    };

    if (q == 1) {
      // s -> t_0, once around the whole half cycle, back along the same path.
      WalkBuilder b(s);
      b.append_reversed(paths[0]);
      cycle_segment(b, 0, L);
      b.append_forward(paths[0]);
      b.c.weight = Half::half();
      out.push_back(std::move(b.c));
    } else {
      for (std::size_t i = 0; i < q; ++i) {
        WalkBuilder b(s);
        b.append_reversed(paths[i]);
        const std::size_t from = tpos[i];
        const std::size_t steps = (tpos[(i + 1) % q] + L - from) % L;
        cycle_segment(b, from, steps);
        b.append_forward(paths[(i + 1) % q]);
        b.c.weight = Half::half();
        out.push_back(std::move(b.c));
      }
    }
    for (std::size_t i = 0; i < q; ++i)
      for (EdgeId e : paths[i].edges) f.set_value(e, Half::zero());
    for (EdgeId e : cyc.edges) f.set_value(e, Half::zero());
  }

  FVS_CHECK(f.size_doubled() == 0, "value-1 edges left at s after peeling");
  long long total = 0;
  for (const WeightedCycle& c : out) total += c.weight.doubled();
  FVS_CHECK(total == f0.size_doubled(), "explicit packing weight differs from packing size");
  return out;
}

std::string validate_basic_packing(const BasicPacking& f) {
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  if (!g.has_vertex(s)) return "source vertex missing";

  std::vector<int> ones(g.vertex_id_bound(), 0), halves(g.vertex_id_bound(), 0);
  int at_s = 0;
  for (EdgeId e = 0; e < g.edge_id_bound(); ++e) {
    if (!g.has_edge(e)) continue;
    auto [u, v] = g.endpoints(e);
    if (u == v) return "graph has a self-loop";
    const int d = f.value_doubled(e);
    if (d < 0 || d > 2) return "edge label out of range";
    if (u == s || v == s) {
      if (d == 1) return "half label on an edge at s";
      if (d == 2) ++at_s;
    }
    if (d == 2) {
      ++ones[u];
      ++ones[v];
    } else if (d == 1) {
      ++halves[u];
      ++halves[v];
    }
  }
  if (at_s != f.size_doubled()) return "cached size out of sync";

  for (VertexId v : g.vertices()) {
    if (v == s) continue;
    if (ones[v] != f.ones_at(v) || halves[v] != f.halves_at(v))
      return "cached counts out of sync at vertex " + std::to_string(v);
    const int o = ones[v], h = halves[v];
    const bool ok = (o == 0 && h == 0) || (o == 2 && h == 0) || (o == 0 && h == 2) ||
                    (o == 1 && h == 2);
    if (!ok)
      return "vertex " + std::to_string(v) + " matches no type (ones=" + std::to_string(o) +
             ", halves=" + std::to_string(h) + ")";
  }

  // Half edges decompose into disjoint cycles, each with an odd number of
  // type-T vertices.
  std::vector<char> seen(g.vertex_id_bound(), 0);
  for (VertexId v : g.vertices()) {
    if (v == s || seen[v] || halves[v] != 2) continue;
    int t_count = 0;
    VertexId cur = v;
    EdgeId in_e = -1;
    for (EdgeId e : g.incident_edges(v))
      if (f.value_doubled(e) == 1 && (in_e < 0 || e < in_e)) in_e = e;
    std::size_t guard = 0;
    for (;;) {
      if (seen[cur]) return "half edges do not form disjoint simple cycles";
      seen[cur] = 1;
      if (ones[cur] == 1) ++t_count;
      const VertexId nxt = g.other_endpoint(in_e, cur);
      if (nxt == v) break;
      if (nxt == s || halves[nxt] != 2) return "half cycle leaves the type-H/T set";
      EdgeId out_e = -1;
      for (EdgeId e : g.incident_edges(nxt))
        if (f.value_doubled(e) == 1 && e != in_e) out_e = e;
      if (out_e < 0) return "half cycle stuck";
      in_e = out_e;
      cur = nxt;
      if (++guard > static_cast<std::size_t>(g.num_edges()) + 1)
        return "half cycle trace does not close";
    }
    if (t_count % 2 == 0) return "half cycle with an even number of type-T vertices";
  }
  return "";
}

std::string validate_augmenting_walk(const BasicPacking& f, const AugmentingWalk& w) {
  const MultiGraph& g = f.graph();
  const VertexId s = f.source();
  const std::size_t l = w.edges.size();
  if (l < 1 || w.vertices.size() != l + 1) return "walk shape";
  for (std::size_t i = 0; i < l; ++i) {
    if (!g.has_edge(w.edges[i])) return "walk uses unknown edge";
    auto [a, b] = g.endpoints(w.edges[i]);
    if (!((a == w.vertices[i] && b == w.vertices[i + 1]) ||
          (b == w.vertices[i] && a == w.vertices[i + 1])))
      return "walk edges and vertices disagree";
  }
  if (w.vertices.front() != s) return "condition 1: walk must start at s";
  if (f.value_doubled(w.edges.front()) != 0) return "condition 2: first edge must carry 0";
  {
    std::vector<EdgeId> es = w.edges;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end())
      return "condition 3: edges must be distinct";
  }
  {
    std::vector<VertexId> vs(w.vertices.begin(), w.vertices.end() - 1);
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      return "condition 4: all but the last vertex must be distinct";
  }
  for (std::size_t i = 1; i + 1 <= l; ++i) {
    const VertexId v = w.vertices[i];
    const VertexType tv = f.type(v);
    if (tv == VertexType::O) continue;
    if (tv == VertexType::I &&
        (f.value_doubled(w.edges[i - 1]) == 2 || f.value_doubled(w.edges[i]) == 2))
      continue;
    return "condition 5: interior vertex " + std::to_string(v) + " unusable";
  }
  const VertexId last = w.vertices.back();
  std::size_t first_occurrence = l;
  for (std::size_t i = 0; i < l; ++i)
    if (w.vertices[i] == last) {
      first_occurrence = i;
      break;
    }
  if (first_occurrence < l) {
    if (last == s) {
      if (f.value_doubled(w.edges.back()) != 0) return "condition 6a: closing edge must carry 0";
      if (w.h != l) return "flip prefix must be the whole walk when closing at s";
    } else {
      const VertexType tl = f.type(last);
      if (tl == VertexType::O) {
        // fine
      } else if (tl == VertexType::I) {
        // the edges entering the two occurrences: e_i and e_l
        if (f.value_doubled(w.edges[first_occurrence - 1]) != 2 &&
            f.value_doubled(w.edges.back()) != 2)
          return "condition 6c: revisited type-I end needs a value-1 edge";
      } else {
        return "condition 6: revisited end must be type-O or type-I";
      }
      if (w.h != first_occurrence) return "flip prefix must end at the revisit";
    }
  } else {
    const VertexType tl = f.type(last);
    if (tl != VertexType::H && tl != VertexType::T)
      return "condition 7: fresh end must be type-H or type-T";
    if (w.h != l) return "flip prefix must be the whole walk for a fresh end";
  }
  return "";
}

}  // namespace fvs
