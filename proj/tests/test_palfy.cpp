#include "doctest.h"

#include "cdgraph/family.hpp"
#include "cdgraph/palfy.hpp"
#include "oracles.hpp"

using namespace cdgraph;

TEST_CASE("satisfies_palfy examples") {
  CHECK_FALSE(satisfies_palfy(Graph::empty(3)));
  for (int n = 1; n <= 8; ++n) CHECK(satisfies_palfy(Graph::complete(n)));
  CHECK(satisfies_palfy(family_graph(5, false)));
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(oracle::brute_palfy(two_triangles));
  CHECK(satisfies_palfy(two_triangles));
  // Fewer than three vertices: nothing to check.
  CHECK(satisfies_palfy(Graph::empty(1)));
  CHECK(satisfies_palfy(Graph::empty(2)));
}

TEST_CASE("palfy_witness") {
  CHECK(oracle::brute_palfy(Graph::path(4)));
  CHECK_FALSE(palfy_witness(Graph::path(4)).has_value());
  CHECK(palfy_witness(Graph::empty(3)) == Triple{0, 1, 2});
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(palfy_witness(star) == Triple{1, 2, 3});
  // Lexicographically first: {0,2,4} of P5 beats {0,3,...} and {1,3,...}.
  CHECK(palfy_witness(Graph::path(5)) == Triple{0, 2, 4});
}

TEST_CASE("palfy agrees with the brute-force triple scan, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labeled(n)) {
      const auto w = palfy_witness(g);
      REQUIRE(satisfies_palfy(g) == oracle::brute_palfy(g));
      REQUIRE(w.has_value() == !oracle::brute_palfy(g));
      if (w) {
        const auto& [a, b, c] = *w;
        REQUIRE(a < b);
        REQUIRE(b < c);
        REQUIRE_FALSE(g.adjacent(a, b));
        REQUIRE_FALSE(g.adjacent(a, c));
        REQUIRE_FALSE(g.adjacent(b, c));
      }
    }
  }
}

TEST_CASE("palfy corollaries over every graph with 3 <= n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labeled(n)) {
      if (!satisfies_palfy(g)) continue;
      const auto comps = connected_components(g);
      if (comps.size() > 1) {
        REQUIRE(comps.size() == 2);
        for (VertexSet c : comps) REQUIRE(is_complete(g, c));
      } else {
        REQUIRE(diameter(g).value() <= 3);
      }
    }
  }
}

TEST_CASE("palfy is isomorphism-invariant") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 3 + i % 5;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    REQUIRE(satisfies_palfy(g) == satisfies_palfy(g.relabel(oracle::random_permutation(n, rng))));
  }
}
