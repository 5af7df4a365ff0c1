#include <doctest.h>

#include "grounded/error.hpp"
#include "grounded/fixtures.hpp"
#include "grounded/graph.hpp"

using namespace grounded;

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(graph(3, {{0, 0}}), error);
  CHECK_THROWS_AS(graph(3, {{0, 1}, {1, 0}}), error);
  CHECK_THROWS_AS(graph(3, {{0, 3}}), error);
  try {
    graph(2, {{0, 5}});
  } catch (const error& e) {
    CHECK(e.kind() == error_kind::invalid_argument);
  }
}

TEST_CASE("edges and adjacency lists are sorted") {
  graph g(4, {{3, 1}, {2, 0}, {0, 1}});
  REQUIRE(g.m() == 3);
  CHECK(g.edges()[0] == edge(0, 1));
  CHECK(g.edges()[1] == edge(0, 2));
  CHECK(g.edges()[2] == edge(1, 3));
  CHECK(g.neighbors(0) == std::vector<vertex>{1, 2});
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(2, 3));
  CHECK(g.degree(1) == 2);
}

TEST_CASE("names default to ids") {
  graph g = make_path(3);
  CHECK(g.name(2) == "2");
  g.set_names({"a", "b", "c"});
  CHECK(g.name(1) == "b");
}

TEST_CASE("biconnectivity") {
  CHECK(is_biconnected(make_complete(3)));
  CHECK_FALSE(is_biconnected(make_path(3)));
  CHECK_FALSE(is_biconnected(make_complete(2)));
  CHECK(is_biconnected(make_cycle(9)));
  // Two triangles sharing vertex 0.
  graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  CHECK(is_connected(bowtie));
  CHECK_FALSE(is_biconnected(bowtie));
  CHECK(is_biconnected(fig5_fixture()));
}

TEST_CASE("theta graphs") {
  graph g = make_theta({4, 4, 2});
  CHECK(g.n() == 2 + 3 + 3 + 1);
  CHECK(g.m() == 10);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 3);
  CHECK(is_biconnected(g));
}

TEST_CASE("components_without and induced subgraphs") {
  graph g = make_cycle(6);
  std::vector<char> removed(6, 0);
  removed[0] = removed[3] = 1;
  auto comps = components_without(g, removed);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<vertex>{1, 2});
  CHECK(comps[1] == std::vector<vertex>{4, 5});

  graph h = g.induced({5, 0, 1});
  CHECK(h.n() == 3);
  CHECK(h.m() == 2);
  CHECK(h.adjacent(0, 1));
  CHECK(h.adjacent(1, 2));
}

TEST_CASE("fig5 fixture") {
  graph g = fig5_fixture();
  CHECK(g.n() == 21);
  CHECK(g.m() == 26);
  CHECK(g.name(0) == "s");
}
