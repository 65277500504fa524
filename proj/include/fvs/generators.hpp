#pragma once

#include <cstdint>

#include "fvs/multigraph.hpp"

namespace fvs {

// Deterministic instance families; a fixed (params, seed) pair always yields
// the same graph.

// A tree on the n-k non-planted vertices plus m - (n-k-1) chord edges, each
// with at least one endpoint among the planted vertices 0..k-1. Every cycle
// meets the planted set, so fvs <= k.
MultiGraph gen_planted_fvs(int n, int k, long long m, std::uint64_t seed);

// m edges with endpoints drawn uniformly; parallels arise naturally, and
// self-loops too unless disabled.
MultiGraph gen_random_multigraph(int n, long long m, std::uint64_t seed,
                                 bool allow_loops = true);

// Cycles of petal_len internal vertices each, all through hub vertex 0.
MultiGraph gen_flower(int petals, int petal_len = 2);

MultiGraph gen_grid(int rows, int cols);

}  // namespace fvs
