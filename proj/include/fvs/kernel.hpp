#pragma once

#include "fvs/cyclecover.hpp"
#include "fvs/multigraph.hpp"
#include "fvs/reductions.hpp"

namespace fvs {

struct KernelStats {
  long long iterations = 0;          // passes of the main loop
  long long covers_computed = 0;     // min_cycle_cover calls
  long long s_removals = 0;          // budget-exceeded removals of the picked s
  long long reductions_applied = 0;  // s-cycle cover reductions applied
};

struct KernelOutcome {
  enum class Verdict { Reduced, TriviallyNo };
  Verdict verdict = Verdict::Reduced;
  MultiGraph graph;  // meaningful only when verdict == Reduced
  int k_prime = 0;
  ReductionLog log;  // forced vertices across reductions and vertex removals
  KernelStats stats;
};

// Hard cap on kernelize loop passes for an initial parameter k: 2k^3 + 4k^2
// + 3k for the potential argument plus terminal slack.
inline long long kernel_iteration_bound(int k) {
  const long long kk = k;
  return 2 * kk * kk * kk + 4 * kk * kk + 3 * kk + 2;
}

// The s-cycle cover reduction for a half-integral minimum cover x: every
// x = 1 vertex gets its multiplicity to s set to exactly 2, and the unique
// s-edge of every tree component of G - X - s that has one (these are the
// bridges of G - X into tree components) is removed. Preserves fvs;
// afterwards d(s) <= 2 x(V), which is checked on every call.
void cycle_cover_reduction_inplace(MultiGraph& g, VertexId s, const CycleCover& x);
MultiGraph cycle_cover_reduction(const MultiGraph& g, VertexId s, const CycleCover& x);

// Full kernelization driver. Loop: basic reductions; NO when k < 0; done when
// n <= 2k^2 + k and m <= 4k^2; NO when the maximum degree is at most 2k; a
// vertex on more than k double edges is removed (forced); NO when more than
// k^2 double edges remain; otherwise the lowest-id vertex s of degree > 2k
// gets a minimum s-cycle cover under budget k — removal of s when the budget
// is exceeded, the s-cycle cover reduction otherwise. A Reduced outcome
// satisfies n' <= 2k'^2 + k' and m' <= 4k'^2 with 0 <= k' <= k.
KernelOutcome kernelize(const MultiGraph& g, int k);

}  // namespace fvs
