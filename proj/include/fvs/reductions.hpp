#pragma once

#include <utility>
#include <vector>

#include "fvs/multigraph.hpp"

namespace fvs {

struct ReductionLog {
  std::vector<VertexId> forced;  // vertices removed together with a parameter decrement
  int k_decrements = 0;          // always equal to forced.size()
  // degree-2 removals: (removed vertex, bypass edge joining its neighbors)
  std::vector<std::pair<VertexId, EdgeId>> smoothed;
  long long edges_touched = 0;  // work counter for the linear-time property
};

struct BasicReductionResult {
  MultiGraph graph;
  int k_prime = 0;
  ReductionLog log;
};

// Exhaustively applies the four basic rules until none fires:
//   1. a vertex with a self-loop is removed and k decreases by one
//   2. a vertex of degree at most one is removed
//   3. a vertex of degree two is removed, its neighbors joined by a new edge
//      (coinciding neighbors produce a self-loop, which re-triggers rule 1)
//   4. more than two parallel edges between a pair collapse to a double edge
// The output has no self-loop, minimum degree >= 3 and every multiplicity
// <= 2 (checked on every call). k' may go negative; deciding NO is the
// kernel driver's job. Worklist-driven; every edge is touched O(1) amortized
// times. The input graph is left untouched.
BasicReductionResult apply_basic_reductions(const MultiGraph& g, int k);

// In-place flavor used by the kernel loop; appends to an existing log.
void apply_basic_reductions_inplace(MultiGraph& g, int& k, ReductionLog& log);

}  // namespace fvs
