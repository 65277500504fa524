#pragma once

#include <optional>
#include <vector>

#include "fvs/cyclecover.hpp"
#include "fvs/multigraph.hpp"

namespace fvs {

// Desk-scale brute-force ground truth. Everything here is deliberately
// independent of the augmenting-walk machinery it is used to check.

struct FvsResult {
  int size = 0;
  std::vector<VertexId> witness;
};

// True iff the graph minus `removed` is a forest; a self-loop or a pair with
// multiplicity >= 2 counts as a cycle.
bool is_forest_excluding(const MultiGraph& g, const std::vector<VertexId>& removed);

// Exact minimum feedback vertex set by subset enumeration in increasing size.
// Requires n <= 16.
FvsResult brute_fvs(const MultiGraph& g);

struct SCycle {
  std::vector<VertexId> vertices;  // v_0 = s, ..., v_l = s
  std::vector<EdgeId> edges;
};

// DFS over walks from s obeying the s-cycle rules (no U-turns, each edge used
// at most twice, interior vertices != s), pruned once the collected x-weight
// reaches 1. Returns a witness s-cycle with x(V(C)) < 1 or nullopt. Walk
// enumeration is exponential in the worst case; past the node budget the
// search stops with an error, never with a silently truncated answer.
std::optional<SCycle> find_violating_s_cycle(const MultiGraph& g, VertexId s,
                                             const CycleCover& x,
                                             long long node_budget = 200'000'000);

// Exact minimum half-integral s-cycle cover over all assignments in
// {0, 1/2, 1}^(V - s), enumerated by increasing size and then vertex-id order
// with value order 0 < 1/2 < 1 (so the result is the lexicographically first
// minimum). Requires n <= 8 and no self-loop at s.
CycleCover brute_min_cover(const MultiGraph& g, VertexId s);

// True iff every listed walk is a valid s-cycle of g and every vertex other
// than s collects weighted occupancy at most 1.
bool verify_packing(const MultiGraph& g, VertexId s, const ExplicitPacking& p);

}  // namespace fvs
