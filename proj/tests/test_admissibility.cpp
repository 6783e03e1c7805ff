#include "doctest.h"

#include "cdgraph/admissibility.hpp"
#include "cdgraph/errors.hpp"
#include "oracles.hpp"

using namespace cdgraph;

namespace {

int rank(Truth t) { return t == Truth::No ? 0 : t == Truth::Unknown ? 1 : 2; }

int edges_among(const Graph& g, VertexSet s) {
  int e = 0;
  for (Vertex a : s.members())
    for (Vertex b : s.members())
      if (a < b && g.adjacent(a, b)) ++e;
  return e;
}

}  // namespace

TEST_CASE("subgraph counts") {
  std::mt19937 rng(23);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 7;
    const Graph g = oracle::random_graph(n, 0.5, rng);
    for (Vertex v = 0; v < n; ++v) {
      const int d = degree(g, v);
      const int e = edges_among(g, g.neighbors(v));
      REQUIRE(incident_edge_subgraphs(g, v).size() == (1u << d) - 1);
      REQUIRE(neighbor_edge_subgraphs(g, v).size() == (1u << e) - 1);
      for (const Graph& h : incident_edge_subgraphs(g, v)) {
        REQUIRE(h.order() == n);
        REQUIRE(h.edge_count() < g.edge_count());
      }
      for (const Graph& h : neighbor_edge_subgraphs(g, v)) REQUIRE(h.order() == n - 1);
    }
  }
}

TEST_CASE("subgraph examples") {
  const Graph p3 = Graph::path(3);
  const auto inc = incident_edge_subgraphs(p3, 1);
  REQUIRE(inc.size() == 3);
  CHECK(inc[0] == Graph(3, {{1, 2}}));
  CHECK(inc[1] == Graph(3, {{0, 1}}));
  CHECK(inc[2] == Graph::empty(3));

  CHECK(incident_edge_subgraphs(Graph(3, {{0, 1}}), 2).empty());
  CHECK(neighbor_edge_subgraphs(family_graph(6, true), 4).size() == 7);
  CHECK(neighbor_edge_subgraphs(family_graph(5, false), 4).empty());

  // Labels shift down past the deleted vertex.
  const auto nb = neighbor_edge_subgraphs(Graph::complete(3), 0);
  REQUIRE(nb.size() == 1);
  CHECK(nb[0] == Graph::empty(2));
}

TEST_CASE("admissibility with the seed KB") {
  // Depends on the shipped seed file.
  const KnowledgeBase seed = KnowledgeBase::load(CDGRAPH_SEED_KB);
  const Graph c5 = family_graph(5, false);
  const FamilyLabeling l = family_labeling(5, false);
  const Vertex r = l.others.members().front();
  CHECK(is_admissible(c5, r, seed).value == Truth::Yes);
  CHECK(is_strongly_admissible(c5, r, seed).value == Truth::Yes);
  CHECK(is_admissible(c5, l.q1, seed).value == Truth::Yes);
  CHECK(is_strongly_admissible(c5, l.q1, seed).value == Truth::Yes);

  // Without facts the P4 left behind by deleting r is undecided.
  const Verdict open = is_admissible(c5, r, KnowledgeBase{});
  CHECK(open.value == Truth::Unknown);
  REQUIRE(open.blocking.has_value());
  CHECK(are_isomorphic(open.blocking->subgraph, Graph::path(4)));
}

TEST_CASE("an Occurs fact blocks admissibility") {
  const KnowledgeBase kb = KnowledgeBase::from_facts({make_fact(Graph::path(4), Status::Occurs, "hypothetical")});
  const Verdict v = is_admissible(family_graph(5, false), 4, kb);
  CHECK(v.value == Truth::No);
  REQUIRE(v.blocking.has_value());
  CHECK(v.blocking->classification.status == Status::Occurs);
  CHECK(is_strongly_admissible(family_graph(5, false), 4, kb).value == Truth::No);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(is_admissible(Graph::empty(1), 0, KnowledgeBase{}), InvalidArgument);
  CHECK_THROWS_AS(is_admissible(Graph::path(3), 3, KnowledgeBase{}), InvalidArgument);
}

TEST_CASE("strong admissibility never exceeds admissibility") {
  const KnowledgeBase seed = KnowledgeBase::load(CDGRAPH_SEED_KB);
  std::mt19937 rng(29);
  for (int i = 0; i < 150; ++i) {
    const int n = 3 + i % 4;
    const Graph g = oracle::random_graph(n, 0.7, rng);
    for (Vertex v = 0; v < n; ++v)
      REQUIRE(rank(is_strongly_admissible(g, v, seed).value) <= rank(is_admissible(g, v, seed).value));
  }
}

TEST_CASE("definite verdicts survive extra facts") {
  const KnowledgeBase seed = KnowledgeBase::load(CDGRAPH_SEED_KB);
  const KnowledgeBase more = seed.extended({make_fact(Graph::complete(3), Status::Occurs, "x"),
                                            make_fact(Graph::cycle(4), Status::Occurs, "y")});
  for (const Graph& g : oracle::brute_classes(5)) {
    for (Vertex v = 0; v < 5; ++v) {
      const Truth before = is_strongly_admissible(g, v, seed).value;
      if (before != Truth::Unknown) REQUIRE(is_strongly_admissible(g, v, more).value == before);
    }
  }
}
