#include <set>

#include "doctest.h"

#include "cdgraph/errors.hpp"
#include "cdgraph/family.hpp"
#include "cdgraph/palfy.hpp"
#include "oracles.hpp"

using namespace cdgraph;

TEST_CASE("family_graph construction") {
  CHECK(family_graph(5, false) == Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 4}}));
  CHECK(family_graph(5, true) == Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  CHECK(are_isomorphic(family_graph(5, false), Graph::cycle(5)));
  CHECK_THROWS_AS(family_graph(4, false), InvalidArgument);
  CHECK_THROWS_AS(family_graph(Graph::kMaxVertices + 1, false), InvalidArgument);
}

TEST_CASE("family graphs carry their defining properties, k = 5..8") {
  for (int k = 5; k <= 8; ++k) {
    const Graph plain = family_graph(k, false);
    const Graph bridged = family_graph(k, true);
    CHECK_FALSE(are_isomorphic(plain, bridged));
    for (bool b : {false, true}) {
      const Graph g = family_graph(k, b);
      const FamilyLabeling l = family_labeling(k, b);
      CHECK(satisfies_palfy(g));
      CHECK(degree(g, l.p1) == 2);
      CHECK(degree(g, l.p2) == 2);
      CHECK(g.adjacent(l.p1, l.p2));
      CHECK(common_neighbors(g, l.p1, l.p2).empty());
      CHECK(g.adjacent(l.q1, l.q2) == b);
      for (Vertex r : l.others.members()) {
        for (Vertex w = 0; w < k; ++w) {
          if (w == r) continue;
          CHECK(g.adjacent(r, w) == (w != l.p1 && w != l.p2));
        }
      }
      const auto found = is_in_family(g);
      REQUIRE(found.has_value());
      CHECK(found->bridge == b);
    }
  }
}

TEST_CASE("is_in_family examples") {
  const auto l = is_in_family(family_graph(6, true));
  REQUIRE(l.has_value());
  CHECK(l->bridge);
  CHECK(*l == family_labeling(6, true));

  CHECK_FALSE(is_in_family(Graph::complete(5)).has_value());
  CHECK_FALSE(is_in_family(Graph::path(4)).has_value());
  // Right local shape but fails Palfy: p1 p2 q1 q2 plus an isolated vertex.
  CHECK_FALSE(is_in_family(Graph(5, {{0, 1}, {0, 2}, {1, 3}})).has_value());

  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    const Graph g = family_graph(5, false).relabel(oracle::random_permutation(5, rng));
    const auto found = is_in_family(g);
    REQUIRE(found.has_value());
    CHECK_FALSE(found->bridge);
    CHECK(degree(g, found->p1) == 2);
    CHECK(degree(g, found->p2) == 2);
    CHECK(g.adjacent(found->p1, found->q1));
    CHECK(g.adjacent(found->p2, found->q2));
  }
}

TEST_CASE("hypotheses force the family: exhaustive n = 5, 6") {
  for (int n : {5, 6}) {
    std::set<CanonicalKey> accepted;
    for (const Graph& g : oracle::all_labeled(n))
      if (is_in_family(g)) accepted.insert(canonical_key(g));
    const std::set<CanonicalKey> expected{canonical_key(family_graph(n, false)),
                                          canonical_key(family_graph(n, true))};
    CHECK(accepted == expected);
  }
}
