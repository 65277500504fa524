#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fvs/cyclecover.hpp"
#include "fvs/oracle.hpp"
#include "test_support.hpp"

using namespace fvs;
using test::from_edges;

TEST_CASE("Half is exact doubled-integer arithmetic") {
  CHECK(Half::zero().doubled() == 0);
  CHECK(Half::half().doubled() == 1);
  CHECK(Half::one().doubled() == 2);
  CHECK(Half::from_doubled(1) == Half::half());
  CHECK_THROWS_AS(Half::from_doubled(3), std::invalid_argument);
  CHECK(Half::half().str() == "1/2");
  CHECK(fraction_str(7) == "7/2");
  CHECK(fraction_str(4) == "2");
}

TEST_CASE("search on a zero packing finds the triangle walk") {
  MultiGraph g = test::cycle(3);
  BasicPacking f(g, 0);
  auto r = find_augmenting_walk(f);
  REQUIRE(r.walk.has_value());
  const auto& w = *r.walk;
  CHECK(w.vertices.front() == 0);
  CHECK(w.vertices.back() == 0);
  CHECK(w.edges.size() == 3);
  CHECK(f.value_doubled(w.edges.back()) == 0);
  CHECK(w.h == 3);
  CHECK(validate_augmenting_walk(f, w) == "");
}

TEST_CASE("no walk in a star; all leaves end up reachable") {
  MultiGraph g = test::star(3);
  BasicPacking f(g, 0);
  auto r = find_augmenting_walk(f);
  CHECK_FALSE(r.walk.has_value());
  for (VertexId v = 1; v <= 3; ++v) {
    CHECK(r.prev.reachable(v));
    CHECK(r.prev.prev[v] != PrevTable::npos);
  }
}

TEST_CASE("saturated delta(s) edges block every root") {
  MultiGraph g = test::cycle(3);
  BasicPacking f(g, 0);
  f.set_value(0, Half::one());  // 0-1
  f.set_value(1, Half::one());  // 1-2
  f.set_value(2, Half::one());  // 2-0
  REQUIRE(validate_basic_packing(f) == "");
  auto r = find_augmenting_walk(f);
  CHECK_FALSE(r.walk.has_value());
  CHECK_FALSE(r.prev.reachable(1));
  CHECK_FALSE(r.prev.reachable(2));
}

TEST_CASE("augmenting the triangle walk saturates it") {
  MultiGraph g = test::cycle(3);
  BasicPacking f(g, 0);
  auto r = find_augmenting_walk(f);
  REQUIRE(r.walk.has_value());
  augment(f, *r.walk);
  CHECK(f.size_doubled() == 2);
  for (EdgeId e = 0; e < 3; ++e) CHECK(f.value_doubled(e) == 2);
  CHECK(validate_basic_packing(f) == "");
}

TEST_CASE("a revisited type-O end turns the closing tail into halves") {
  // paw: s-a plus triangle a-b-c; the only augmenting walk revisits a
  MultiGraph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
  BasicPacking f(g, 0);
  auto r = find_augmenting_walk(f);
  REQUIRE(r.walk.has_value());
  CHECK(r.walk->vertices.back() == 1);
  CHECK(r.walk->h < r.walk->edges.size());
  CHECK(validate_augmenting_walk(f, *r.walk) == "");
  augment(f, *r.walk);
  CHECK(f.size_doubled() == 1);
  CHECK(f.value_doubled(0) == 2);  // s-a flipped to 1
  CHECK(f.value_doubled(1) == 1);  // triangle edges become halves
  CHECK(f.value_doubled(2) == 1);
  CHECK(f.value_doubled(3) == 1);
  CHECK(f.type(1) == VertexType::T);
  CHECK(f.type(2) == VertexType::H);
  CHECK(f.type(3) == VertexType::H);
  CHECK(validate_basic_packing(f) == "");
}

TEST_CASE("augment rejects malformed walks") {
  MultiGraph g = test::cycle(3);
  BasicPacking f(g, 0);
  AugmentingWalk w;
  CHECK_THROWS_AS(augment(f, w), std::invalid_argument);
  w.vertices = {0, 1};
  w.edges = {2};  // edge 2 joins 2-0, not 0-1
  w.h = 1;
  CHECK_THROWS_AS(augment(f, w), std::invalid_argument);
  w.edges = {0};
  w.vertices = {1, 0};  // must start at s
  CHECK_THROWS_AS(augment(f, w), std::invalid_argument);
}

TEST_CASE("extraction after saturating the triangle gives a matching cover") {
  MultiGraph g = test::cycle(3);
  auto r = min_cycle_cover(g, 0, 100);
  REQUIRE_FALSE(r.exceeds_budget);
  CHECK(r.cover->size_doubled == 2);
  CHECK(r.packing.size_doubled() == 2);
  CHECK(brute_min_cover(g, 0).size_doubled == 2);
}

TEST_CASE("forests have the zero cover") {
  auto r = min_cycle_cover(test::star(5), 0, 100);
  REQUIRE_FALSE(r.exceeds_budget);
  CHECK(r.cover->size_doubled == 0);
  for (signed char d : r.cover->x_doubled) CHECK(d == 0);
}

TEST_CASE("double edge: the half value upgrades to one") {
  MultiGraph g = from_edges(2, {{0, 1}, {0, 1}});
  auto r = min_cycle_cover(g, 0, 100);
  REQUIRE_FALSE(r.exceeds_budget);
  CHECK(r.cover->x_doubled[1] == 2);
  CHECK(r.cover->size_doubled == 2);
}

TEST_CASE("min_cycle_cover on fixed instances") {
  SUBCASE("K4 needs 3/2") {
    auto r = min_cycle_cover(test::complete(4), 0, 100);
    REQUIRE_FALSE(r.exceeds_budget);
    CHECK(r.cover->size_doubled == 3);
    CHECK(brute_min_cover(test::complete(4), 0).size_doubled == 3);
  }
  SUBCASE("two triangles sharing s need 2") {
    MultiGraph g = from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto r = min_cycle_cover(g, 0, 100);
    REQUIRE_FALSE(r.exceeds_budget);
    CHECK(r.cover->size_doubled == 4);
  }
  SUBCASE("K5 under budget 2 bails out") {
    auto r = min_cycle_cover(test::complete(5), 0, 2);
    CHECK(r.exceeds_budget);
    CHECK_FALSE(r.cover.has_value());
    CHECK(r.packing.size_doubled() > 2);
    CHECK(brute_min_cover(test::complete(5), 0).size_doubled == 4);
  }
  SUBCASE("paw needs 1/2 via a revisit augmentation") {
    MultiGraph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
    auto r = min_cycle_cover(g, 0, 100);
    REQUIRE_FALSE(r.exceeds_budget);
    CHECK(r.cover->size_doubled == 1);
    CHECK(r.cover->x_doubled[1] == 1);
  }
}

TEST_CASE("min_cycle_cover rejects self-loops and bad arguments") {
  MultiGraph g = from_edges(2, {{0, 0}, {0, 1}});
  CHECK_THROWS_AS(min_cycle_cover(g, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(min_cycle_cover(test::cycle(3), 0, -1), std::invalid_argument);
  CHECK_THROWS_AS(min_cycle_cover(test::cycle(3), 9, 4), std::invalid_argument);
}

TEST_CASE("every augmentation step adds exactly 1/2 or 1 and stays valid") {
  std::mt19937_64 rng(1234);
  int augmentations = 0;
  for (int round = 0; round < 300; ++round) {
    const int n = 2 + static_cast<int>(rng() % 9);
    MultiGraph g = test::random_multigraph(rng, n, static_cast<int>(rng() % 26),
                                           /*allow_loops=*/false);
    BasicPacking f(g, 0);
    const auto inc = incidence_sorted_by_edge(g);
    for (;;) {
      auto r = find_augmenting_walk(f, inc);
      if (!r.walk) break;
      CHECK(validate_augmenting_walk(f, *r.walk) == "");
      const int before = f.size_doubled();
      const bool closes = r.walk->vertices.back() == 0;
      augment(f, *r.walk);
      CHECK(f.size_doubled() - before == (closes ? 2 : 1));
      CHECK(validate_basic_packing(f) == "");
      ++augmentations;
    }
  }
  CHECK(augmentations > 200);
}

TEST_CASE("strong duality against the brute-force oracle") {
  std::mt19937_64 rng(5150);
  for (int round = 0; round < 200; ++round) {
    const int n = 2 + static_cast<int>(rng() % 7);  // n <= 8
    MultiGraph g = test::random_multigraph(rng, n, static_cast<int>(rng() % (n + 5)),
                                           /*allow_loops=*/false);
    auto r = min_cycle_cover(g, 0, 2 * g.num_edges() + 2);
    REQUIRE_FALSE(r.exceeds_budget);
    auto brute = brute_min_cover(g, 0);
    CHECK(r.cover->size_doubled == brute.size_doubled);
    CHECK_FALSE(find_violating_s_cycle(g, 0, *r.cover).has_value());
    auto cert = explicit_packing(r.packing);
    long long weight = 0;
    for (const auto& c : cert) weight += c.weight.doubled();
    CHECK(weight == r.packing.size_doubled());
    CHECK(verify_packing(g, 0, cert));
  }
}

TEST_CASE("explicit packing of fixed labelings") {
  SUBCASE("saturated triangle yields one unit cycle") {
    MultiGraph g = test::cycle(3);
    BasicPacking f(g, 0);
    for (EdgeId e = 0; e < 3; ++e) f.set_value(e, Half::one());
    auto p = explicit_packing(f);
    REQUIRE(p.size() == 1);
    CHECK(p[0].weight == Half::one());
    CHECK(p[0].edges.size() == 3);
    CHECK(verify_packing(g, 0, p));
  }
  SUBCASE("zero packing yields nothing") {
    MultiGraph g = test::cycle(3);
    BasicPacking f(g, 0);
    CHECK(explicit_packing(f).empty());
  }
  SUBCASE("paw: one half-weight cycle through the type-T vertex") {
    MultiGraph g = from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
    auto r = min_cycle_cover(g, 0, 100);
    auto p = explicit_packing(r.packing);
    REQUIRE(p.size() == 1);
    CHECK(p[0].weight == Half::half());
    CHECK(p[0].edges.size() == 5);  // pendant edge twice, triangle once
    CHECK(verify_packing(g, 0, p));
  }
}

TEST_CASE("identical inputs give identical covers") {
  std::mt19937_64 rng(777);
  for (int round = 0; round < 25; ++round) {
    const std::uint64_t seed = rng();
    std::mt19937_64 r1(seed), r2(seed);
    MultiGraph g1 = test::random_multigraph(r1, 7, 14, false);
    MultiGraph g2 = test::random_multigraph(r2, 7, 14, false);
    auto c1 = min_cycle_cover(g1, 0, 100);
    auto c2 = min_cycle_cover(g2, 0, 100);
    REQUIRE_FALSE(c1.exceeds_budget);
    CHECK(c1.cover->x_doubled == c2.cover->x_doubled);
  }
}

TEST_CASE("the prev table walks back to s with decreasing depth") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 40; ++round) {
    MultiGraph g = test::random_multigraph(rng, 8, 10, false);
    BasicPacking f(g, 0);
    auto r = find_augmenting_walk(f);
    if (r.walk) continue;
    for (VertexId v : g.vertices()) {
      if (!r.prev.reachable(v) || v == 0) continue;
      VertexId cur = v;
      int steps = 0;
      while (cur != 0) {
        const EdgeId pe = r.prev.prev[cur];
        REQUIRE(pe != PrevTable::npos);
        const VertexId parent = g.other_endpoint(pe, cur);
        CHECK(r.prev.depth[parent] == r.prev.depth[cur] - 1);
        cur = parent;
        REQUIRE(++steps <= g.num_vertices());
      }
    }
  }
}
