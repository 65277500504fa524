#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fvs/check.hpp"
#include "fvs/multigraph.hpp"
#include "fvs/oracle.hpp"
#include "test_support.hpp"

using namespace fvs;
using test::from_edges;

TEST_CASE("vertex ids are dense and never reused") {
  MultiGraph g;
  CHECK(g.add_vertex() == 0);
  CHECK(g.num_vertices() == 1);
  MultiGraph g3;
  g3.add_vertex();
  g3.add_vertex();
  g3.add_vertex();
  CHECK(g3.add_vertex() == 3);
  CHECK(g3.num_vertices() == 4);
  const VertexId a = g.add_vertex();
  const VertexId b = g.add_vertex();
  CHECK(a != b);
  g.remove_vertex(a);
  CHECK(g.add_vertex() > b);  // tombstoned slot stays dead
}

TEST_CASE("parallel edges and self-loops") {
  MultiGraph g;
  const VertexId a = g.add_vertex();
  const VertexId b = g.add_vertex();
  const EdgeId e1 = g.add_edge(a, b);
  const EdgeId e2 = g.add_edge(a, b);
  CHECK(e1 != e2);
  CHECK(g.multiplicity(a, b) == 2);
  CHECK(g.num_edges() == 2);
  CHECK(g.degree(a) + g.degree(b) == 4);

  const int before = g.degree(a);
  g.add_edge(a, a);
  CHECK(g.degree(a) == before + 2);
  CHECK(g.multiplicity(a, a) == 1);
  CHECK(g.has_self_loop_at(a));
  g.check_consistency();
}

TEST_CASE("add_edge rejects unknown vertices") {
  MultiGraph g;
  g.add_vertex();
  CHECK_THROWS_AS(g.add_edge(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(g.remove_edge(0), std::invalid_argument);
  CHECK_THROWS_AS(g.remove_vertex(7), std::invalid_argument);
}

TEST_CASE("removals") {
  SUBCASE("vertex removal from a triangle leaves one edge") {
    MultiGraph g = test::cycle(3);
    g.remove_vertex(0);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
  }
  SUBCASE("one of a double edge; ids are never reused") {
    MultiGraph g;
    g.add_vertex();
    g.add_vertex();
    const EdgeId e1 = g.add_edge(0, 1);
    const EdgeId e2 = g.add_edge(0, 1);
    g.remove_edge(e1);
    CHECK(g.multiplicity(0, 1) == 1);
    CHECK(g.add_edge(0, 1) > e2);
  }
  SUBCASE("vertex removal takes its self-loop along") {
    MultiGraph g;
    g.add_vertex();
    g.add_edge(0, 0);
    g.remove_vertex(0);
    CHECK(g.num_edges() == 0);
    CHECK(g.num_vertices() == 0);
  }
}

TEST_CASE("multiplicity counts") {
  MultiGraph g = from_edges(3, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.multiplicity(1, 0) == 3);
  CHECK(g.multiplicity(0, 2) == 0);
}

TEST_CASE("components_avoiding") {
  SUBCASE("triangle minus one vertex is a 2-vertex tree") {
    MultiGraph g = test::cycle(3);
    auto comps = g.components_avoiding({0});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].vertices == std::vector<VertexId>{1, 2});
    CHECK(comps[0].edge_count == 1);
    CHECK(comps[0].tree);
  }
  SUBCASE("a double edge is a cycle, not a tree") {
    MultiGraph g = from_edges(2, {{0, 1}, {0, 1}});
    auto comps = g.components_avoiding({});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].edge_count == 2);
    CHECK_FALSE(comps[0].tree);
  }
  SUBCASE("two disjoint triangles") {
    MultiGraph g = from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    auto comps = g.components_avoiding({});
    REQUIRE(comps.size() == 2);
    CHECK_FALSE(comps[0].tree);
    CHECK_FALSE(comps[1].tree);
  }
  SUBCASE("a lone self-loop is not a tree") {
    MultiGraph g;
    g.add_vertex();
    g.add_edge(0, 0);
    auto comps = g.components_avoiding({});
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].edge_count == 1);
    CHECK_FALSE(comps[0].tree);
  }
}

TEST_CASE("random mutation soak: consistency, degree sum, components") {
  std::mt19937_64 rng(20240811);
  for (int round = 0; round < 60; ++round) {
    MultiGraph g;
    std::vector<VertexId> alive_v;
    std::vector<EdgeId> alive_e;
    for (int step = 0; step < 300; ++step) {
      const int what = static_cast<int>(rng() % 10);
      if (what < 4 || alive_v.empty()) {
        alive_v.push_back(g.add_vertex());
      } else if (what < 8) {
        const VertexId u = alive_v[rng() % alive_v.size()];
        const VertexId v = alive_v[rng() % alive_v.size()];
        alive_e.push_back(g.add_edge(u, v));
      } else if (what == 8 && !alive_e.empty()) {
        const std::size_t i = rng() % alive_e.size();
        g.remove_edge(alive_e[i]);
        alive_e.erase(alive_e.begin() + i);
      } else if (!alive_v.empty()) {
        const std::size_t i = rng() % alive_v.size();
        const VertexId v = alive_v[i];
        g.remove_vertex(v);
        alive_v.erase(alive_v.begin() + i);
        std::vector<EdgeId> still;
        for (EdgeId e : alive_e)
          if (g.has_edge(e)) still.push_back(e);
        alive_e = still;
      }
    }
    g.check_consistency();  // includes degree sum == 2m

    // components partition the vertex set; every edge is internal to one
    auto comps = g.components_avoiding({});
    std::set<VertexId> seen;
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.vertices.size();
      for (VertexId v : c.vertices) CHECK(seen.insert(v).second);
    }
    CHECK(total == static_cast<std::size_t>(g.num_vertices()));
    long long internal = 0;
    for (const auto& c : comps) internal += c.edge_count;
    CHECK(internal == g.num_edges());

    // tree flag agrees with an independent acyclicity check
    for (const auto& c : comps) {
      std::vector<VertexId> others;
      for (VertexId v : g.vertices())
        if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v)) others.push_back(v);
      const bool acyclic = is_forest_excluding(g, others);
      CHECK(c.tree == acyclic);
    }
  }
}

TEST_CASE("incidence_sorted_by_edge is ascending and loop-doubled") {
  MultiGraph g = from_edges(3, {{0, 1}, {1, 2}, {1, 1}, {0, 1}});
  auto inc = incidence_sorted_by_edge(g);
  CHECK(inc[1] == std::vector<EdgeId>{0, 1, 2, 2, 3});
  CHECK(inc[0] == std::vector<EdgeId>{0, 3});
}
