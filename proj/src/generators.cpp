#include "fvs/generators.hpp"

#include <random>

#include "fvs/check.hpp"

namespace fvs {

namespace {

// Bounded draw via modulo: bias is irrelevant here and the sequence stays
// identical across standard library implementations.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

MultiGraph blank(int n) {
  MultiGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  return g;
}

}  // namespace

MultiGraph gen_planted_fvs(int n, int k, long long m, std::uint64_t seed) {
  require(n >= 0 && k >= 0 && k <= n, "gen_planted_fvs: need 0 <= k <= n");
  const long long tree_edges = std::max(0, n - k - 1);
  require(m >= tree_edges, "gen_planted_fvs: m below the spanning-tree size");
  require(k >= 1 || m == tree_edges, "gen_planted_fvs: chords need a planted vertex");

  std::mt19937_64 rng(seed);
  MultiGraph g = blank(n);
  for (VertexId v = k + 1; v < n; ++v)
    g.add_edge(v, k + static_cast<VertexId>(below(rng, v - k)));
  for (long long i = tree_edges; i < m; ++i) {
    const VertexId p = static_cast<VertexId>(below(rng, k));
    VertexId q = static_cast<VertexId>(below(rng, n));
    while (q == p && n > 1) q = static_cast<VertexId>(below(rng, n));
    g.add_edge(p, q);
  }
  return g;
}

MultiGraph gen_random_multigraph(int n, long long m, std::uint64_t seed, bool allow_loops) {
  require(n >= 0 && m >= 0, "gen_random_multigraph: negative size");
  require(m == 0 || n >= (allow_loops ? 1 : 2), "gen_random_multigraph: too few vertices");
  std::mt19937_64 rng(seed);
  MultiGraph g = blank(n);
  for (long long i = 0; i < m; ++i) {
    const VertexId u = static_cast<VertexId>(below(rng, n));
    VertexId v = static_cast<VertexId>(below(rng, n));
    while (!allow_loops && v == u) v = static_cast<VertexId>(below(rng, n));
    g.add_edge(u, v);
  }
  return g;
}

MultiGraph gen_flower(int petals, int petal_len) {
  require(petals >= 0 && petal_len >= 1, "gen_flower: bad sizes");
  MultiGraph g = blank(1 + petals * petal_len);
  const VertexId hub = 0;
  for (int p = 0; p < petals; ++p) {
    const VertexId first = 1 + p * petal_len;
    g.add_edge(hub, first);
    for (int i = 1; i < petal_len; ++i) g.add_edge(first + i - 1, first + i);
    g.add_edge(first + petal_len - 1, hub);
  }
  return g;
}

MultiGraph gen_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "gen_grid: bad sizes");
  MultiGraph g = blank(rows * cols);
  auto at = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(at(r, c), at(r, c + 1));
      if (r + 1 < rows) g.add_edge(at(r, c), at(r + 1, c));
    }
  return g;
}

}  // namespace fvs
