#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fvs/half.hpp"
#include "fvs/multigraph.hpp"

namespace fvs {

// Half-integral minimum s-cycle covers with matching packing certificates.
//
// An s-cycle is a closed walk at s that never revisits s internally, never
// repeats an edge immediately (no U-turns), and uses each edge at most twice.
// An s-cycle cover assigns weights to vertices (x(s) = 0) so that every
// s-cycle collects total weight >= 1, counting vertex multiplicity. The dual
// packing side is represented compactly as an edge labeling f : E -> {0,1/2,1}
// ("basic packing"), characterized by per-vertex incidence patterns:
//
//   type-O: no value-1 and no value-1/2 edges
//   type-I: exactly two value-1 edges, no value-1/2 edges
//   type-H: no value-1 edges, exactly two value-1/2 edges
//   type-T: exactly one value-1 edge and exactly two value-1/2 edges
//
// plus a parity condition: the cycle traced by following value-1/2 edges from
// any type-H/T vertex contains an odd number of type-T vertices. The labeling
// is grown by augmenting walks until none is found, at which point the search
// tree yields a cover of exactly the packing's size (the optimality
// certificate). All sizes are doubled integers; comparisons are exact.

enum class VertexType : unsigned char { O, I, H, T };

class BasicPacking {
 public:
  // All-zero labeling over g. The graph must outlive the packing and must not
  // be mutated while the packing refers to it; g must have no self-loops.
  BasicPacking(const MultiGraph& g, VertexId s);

  const MultiGraph& graph() const { return *g_; }
  VertexId source() const { return s_; }

  Half value(EdgeId e) const { return Half::from_doubled(f_[e]); }
  int value_doubled(EdgeId e) const { return f_[e]; }

  // f(delta(s)) = number of value-1 edges at s = twice the packing size.
  int size_doubled() const { return size_doubled_; }

  int ones_at(VertexId v) const { return ones_[v]; }
  int halves_at(VertexId v) const { return halves_[v]; }
  // Classifies v by its incidence counts; v must not be s and the counts must
  // match one of the four patterns.
  VertexType type(VertexId v) const;

  // Relabels one edge, maintaining the per-vertex counts and the size.
  // Edges at s must stay in {0, 1}.
  void set_value(EdgeId e, Half value);

 private:
  const MultiGraph* g_;
  VertexId s_;
  std::vector<signed char> f_;  // doubled values, indexed by EdgeId
  std::vector<int> ones_;       // per-vertex count of incident value-1 edges
  std::vector<int> halves_;     // per-vertex count of incident value-1/2 edges
  int size_doubled_ = 0;
};

struct PrevTable {
  static constexpr EdgeId npos = -1;
  std::vector<EdgeId> prev;  // parent edge in the search tree; npos at s/unvisited
  std::vector<int> depth;    // -1 unvisited, s at 0
  bool reachable(VertexId v) const { return depth[v] >= 0; }
};

// A walk along which relabeling grows the packing. The defining conditions
// (checked by validate_augmenting_walk):
//   1. v_0 = s
//   2. f(e_1) = 0
//   3. all edges are distinct
//   4. v_0 .. v_{l-1} are distinct (only the last vertex may repeat)
//   5. every interior vertex is type-O, or type-I with at least one of its
//      two walk edges labeled 1
//   6. a repeated end is s with f(e_l) = 0, or type-O, or type-I with
//      f(e_i) = 1 or f(e_l) = 1 (e_i entering the first occurrence)
//   7. a fresh end is type-H or type-T
struct AugmentingWalk {
  std::vector<VertexId> vertices;  // v_0 = s, ..., v_l
  std::vector<EdgeId> edges;       // e_1, ..., e_l
  // Length of the 0<->1 flip prefix: the index i with v_l = v_i when the walk
  // ends at an earlier non-s vertex, otherwise the full length l.
  std::size_t h = 0;
};

struct SearchResult {
  std::optional<AugmentingWalk> walk;
  PrevTable prev;  // final table when no walk was found; partial otherwise
};

// One search-tree pass. Returns an augmenting walk, or the prev table whose
// reachability information certifies optimality. Vertices are processed LIFO
// and incidence lists in ascending EdgeId order, so the result is a pure
// function of the graph's id numbering.
SearchResult find_augmenting_walk(const BasicPacking& f);
SearchResult find_augmenting_walk(const BasicPacking& f,
                                  const std::vector<std::vector<EdgeId>>& inc);

// Relabels f along an augmenting walk. The packing size grows by exactly 1
// when the walk closes at s and by exactly 1/2 otherwise (doubled: 2 or 1).
// Malformed walks are rejected; in debug builds the result is fully rechecked.
void augment(BasicPacking& f, const AugmentingWalk& walk);

struct CycleCover {
  std::vector<signed char> x_doubled;  // indexed by VertexId
  int size_doubled = 0;

  Half value(VertexId v) const { return Half::from_doubled(x_doubled[v]); }
};

// Builds the cover dual to f from the prev table of a failed search. The
// resulting size equals f's size exactly.
CycleCover extract_cover(const BasicPacking& f, const PrevTable& prev);

struct CoverResult {
  bool exceeds_budget = false;
  std::optional<CycleCover> cover;  // present iff !exceeds_budget
  BasicPacking packing;             // certificate (lower-bound witness either way)
};

// Repeated search/augment from the all-zero packing. Stops with
// exceeds_budget as soon as the packing size passes budget_doubled/2 (then
// every cover is larger than budget_doubled/2 by weak duality); otherwise
// returns a minimum cover together with the packing of equal size. Runs in
// O(budget * m): at most budget_doubled + 1 searches of O(m) each.
CoverResult min_cycle_cover(const MultiGraph& g, VertexId s, int budget_doubled);

struct WeightedCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  Half weight;
};
using ExplicitPacking = std::vector<WeightedCycle>;

// Expands a basic packing into explicit weighted s-cycles of equal total
// weight. Test-time certificate only; f itself is not modified.
ExplicitPacking explicit_packing(const BasicPacking& f);

// Full recheck of the three basic-packing conditions straight from the edge
// labels. Returns "" when valid, else a description of the first violation.
std::string validate_basic_packing(const BasicPacking& f);

// Checks all seven conditions of the augmenting-walk definition against f.
std::string validate_augmenting_walk(const BasicPacking& f, const AugmentingWalk& w);

}  // namespace fvs
