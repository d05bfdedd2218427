#include <doctest.h>

#include <algorithm>

#include "gpow/enumerate.hpp"
#include "gpow/extremal.hpp"
#include "gpow/graph.hpp"
#include "oracles.hpp"

using namespace gpow;

TEST_CASE("build_graph dedups and validates") {
  Graph p4 = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(degree_stats(p4).edge_count == 3);

  Graph single = Graph::build(4, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(degree_stats(single).edge_count == 1);
  CHECK(single.has_edge(0, 1));
  CHECK(single.has_edge(1, 0));

  CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 0}}), doctest::Contains("self-loop"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Graph::build(3, {{0, 5}}), doctest::Contains("(0,5)"),
                       std::invalid_argument);
  CHECK_THROWS(Graph::build(0, {}));
}

TEST_CASE("degree_stats") {
  auto p4 = oracle::path(4);
  auto s = degree_stats(p4);
  CHECK(s.min_degree == 1);
  CHECK(s.degrees == std::vector<int>{1, 2, 2, 1});
  CHECK(s.edge_count == 3);

  auto c7 = oracle::cycle(7);
  s = degree_stats(c7);
  CHECK(s.min_degree == 2);
  CHECK(std::all_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d == 2; }));
  CHECK(s.edge_count == 7);

  auto g1 = build_extremal(1);
  s = degree_stats(g1);
  CHECK(s.min_degree == 4);
  CHECK(std::all_of(s.degrees.begin(), s.degrees.end(), [](int d) { return d == 4; }));
  CHECK(s.edge_count == 22);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(oracle::path(4)));
  CHECK_FALSE(is_connected(Graph::build(2, {})));
  CHECK(is_connected(build_extremal(1)));
}

TEST_CASE("closed_neighborhood") {
  auto c7 = oracle::cycle(7);
  VertexSet x(7);
  x.set(0);
  auto nx = closed_neighborhood(c7, x);
  CHECK(nx.to_vector() == std::vector<int>{0, 1, 6});

  auto p4 = oracle::path(4);
  VertexSet mid(4);
  mid.set(1);
  mid.set(2);
  CHECK(closed_neighborhood(p4, mid) == VertexSet::full(4));

  CHECK(closed_neighborhood(p4, VertexSet(4)).none());
}

TEST_CASE("ball") {
  auto p4 = oracle::path(4);
  CHECK(ball(p4, VertexSet::singleton(4, 0), 2).to_vector() == std::vector<int>{0, 1, 2});
  CHECK(ball(p4, VertexSet::singleton(4, 0), 3) == VertexSet::full(4));
  CHECK(ball(p4, VertexSet::singleton(4, 0), 0).to_vector() == std::vector<int>{0});

  // G_1: radius 3 from H1 reaches everything but the far clique {8,9,10}.
  auto g1 = build_extremal(1);
  auto b = ball(g1, VertexSet::singleton(11, 0), 3);
  CHECK(b.count() == 8);
  CHECK_FALSE(b.test(8));
  CHECK_FALSE(b.test(9));
  CHECK_FALSE(b.test(10));
}

TEST_CASE("distances_from") {
  auto dist = distances_from(oracle::path(4), 0);
  CHECK(dist == std::vector<Distance>{0, 1, 2, 3});

  dist = distances_from(oracle::cycle(7), 0);
  CHECK(dist == std::vector<Distance>{0, 1, 2, 3, 3, 2, 1});

  dist = distances_from(Graph::build(2, {}), 0);
  CHECK(dist[0] == 0);
  CHECK_FALSE(dist[1].has_value());
}

TEST_CASE("diameter") {
  CHECK(diameter(oracle::path(4)) == 3);
  CHECK(diameter(oracle::complete(4)) == 1);
  for (int k = 1; k <= 3; ++k) CHECK(diameter(build_extremal(k)) == 4);
  CHECK_FALSE(diameter(Graph::build(3, {{0, 1}})).has_value());
}

TEST_CASE("power") {
  auto p4 = oracle::path(4);
  CHECK(power(p4, 3) == oracle::complete(4));

  auto p4sq = power(p4, 2);
  CHECK(degree_stats(p4sq).edge_count == 5);
  CHECK(p4sq.has_edge(0, 2));
  CHECK(p4sq.has_edge(1, 3));
  CHECK_FALSE(p4sq.has_edge(0, 3));

  auto cube = power(build_extremal(1), 3);
  auto s = degree_stats(cube);
  CHECK(s.edge_count == 46);
  CHECK(std::count(s.degrees.begin(), s.degrees.end(), 10) == 5);
  CHECK(std::count(s.degrees.begin(), s.degrees.end(), 7) == 6);

  CHECK(power(p4, 1) == p4);
  CHECK_THROWS(power(p4, 0));
}

TEST_CASE("BFS agrees with the queue oracle on all connected graphs n<=5") {
  enumerate_connected(5, [&](const Graph& g) {
    for (int v = 0; v < 5; ++v) {
      auto lib = distances_from(g, v);
      auto ref = oracle::bfs(g, v);
      for (int u = 0; u < 5; ++u) CHECK(lib[u].value_or(-1) == ref[u]);
    }
  });
}

TEST_CASE("power and ball properties on all connected graphs n<=5") {
  enumerate_connected(5, [&](const Graph& g) {
    int n = g.vertex_count();
    Distance d = diameter(g);
    REQUIRE(d.has_value());
    // G^diam is complete, G^(diam-1) is not.
    CHECK(power(g, std::max(1, *d)) == oracle::complete(n));
    if (*d >= 2) CHECK(power(g, *d - 1) != oracle::complete(n));
    // Monotonicity and idempotence at k=1.
    Graph g2 = power(g, 2);
    Graph g3 = power(g, 3);
    for (auto [u, v] : g.edges()) CHECK(g2.has_edge(u, v));
    for (auto [u, v] : g2.edges()) CHECK(g3.has_edge(u, v));
    CHECK(power(g2, 1) == g2);
    for (int v = 0; v < n; ++v) {
      CHECK(g3.degree(v) == ball(g, VertexSet::singleton(n, v), 3).count() - 1);
      VertexSet x = VertexSet::singleton(n, v);
      CHECK(closed_neighborhood(g, x) == ball(g, x, 1));
    }
  });
}

TEST_CASE("diameter equals the least k with G^k complete, exhaustively to n=7") {
  for (int n = 2; n <= 7; ++n) {
    enumerate_connected(n, [&](const Graph& g) {
      Distance d = diameter(g);
      REQUIRE(d.has_value());
      int k = 1;
      while (power(g, k) != oracle::complete(n)) ++k;
      CHECK(k == std::max(1, *d));
    });
  }
}
