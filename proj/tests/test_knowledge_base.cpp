#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "cdgraph/errors.hpp"
#include "cdgraph/family.hpp"
#include "cdgraph/knowledge_base.hpp"
#include "oracles.hpp"

using namespace cdgraph;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("cdgraph_kb_" + name);
  std::ofstream(path) << contents;
  return path;
}

const Graph kDiameterThree = parse_edge_list("5; 0-1, 1-3, 2-3, 2-4, 3-4");

}  // namespace

TEST_CASE("load: empty and single record") {
  CHECK(KnowledgeBase::parse("").empty());
  CHECK(KnowledgeBase::load(temp_file("empty", "")).empty());
  CHECK(KnowledgeBase::parse("\n   \n").empty());

  const KnowledgeBase kb = KnowledgeBase::parse(R"({"graph6": "Ch", "status": "not_occurs", "source": "zhang Thm 5"})");
  CHECK(kb.size() == 1);
  const auto fact = kb.lookup(Graph::path(4));
  REQUIRE(fact.has_value());
  CHECK(fact->status == Status::DoesNotOccur);
  CHECK(fact->source == "zhang Thm 5");
}

TEST_CASE("load: conflicts and duplicates") {
  // P4 under two labelings with opposite statuses.
  const std::string conflict =
      "{\"graph6\": \"Ch\", \"status\": \"not_occurs\", \"source\": \"a\"}\n"
      "{\"graph6\": \"" + format_graph6(Graph(4, {{0, 2}, {2, 1}, {1, 3}})) +
      "\", \"status\": \"occurs\", \"source\": \"b\"}\n";
  CHECK_THROWS_AS(KnowledgeBase::parse(conflict), KnowledgeBaseError);
  try {
    KnowledgeBase::parse(conflict);
  } catch (const KnowledgeBaseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }

  const std::string agreeing =
      "{\"graph6\": \"Ch\", \"status\": \"not_occurs\", \"source\": \"first\"}\n"
      "{\"graph6\": \"Ch\", \"status\": \"not_occurs\", \"source\": \"second\"}\n";
  const KnowledgeBase kb = KnowledgeBase::parse(agreeing);
  CHECK(kb.size() == 1);
  CHECK(kb.lookup(Graph::path(4))->source == "first");
}

TEST_CASE("load: malformed input names the line") {
  auto line_of = [](const std::string& text) -> std::string {
    try {
      KnowledgeBase::parse(text);
    } catch (const KnowledgeBaseError& e) {
      return e.what();
    }
    return "";
  };
  const std::string ok = "{\"graph6\": \"Ch\", \"status\": \"not_occurs\", \"source\": \"x\"}\n";
  CHECK(line_of(ok + "not json\n").starts_with("line 2:"));
  CHECK(line_of(ok + "\n{\"graph6\": \"Ch\", \"source\": \"x\"}\n").starts_with("line 3:"));
  CHECK(line_of("{\"graph6\": \"Ch\", \"status\": \"unknown\", \"source\": \"x\"}").starts_with("line 1:"));
  CHECK(line_of("{\"graph6\": \"C\", \"status\": \"occurs\", \"source\": \"x\"}").starts_with("line 1:"));
  CHECK(line_of("[1, 2]").starts_with("line 1:"));
  CHECK(line_of("{\"graph6\": 5, \"status\": \"occurs\", \"source\": \"x\"}").starts_with("line 1:"));
  // 11 vertices exceeds the default canonicalization cap.
  CHECK(line_of("{\"graph6\": \"" + format_graph6(Graph::empty(11)) + "\", \"status\": \"occurs\", \"source\": \"x\"}")
            .starts_with("line 1:"));
  CHECK_THROWS_AS(KnowledgeBase::load("/nonexistent/kb.jsonl"), KnowledgeBaseError);
}

TEST_CASE("lookup") {
  const KnowledgeBase kb = KnowledgeBase::from_facts({make_fact(Graph::path(4), Status::DoesNotOccur, "p4")});
  const std::vector<Vertex> perm{2, 0, 3, 1};
  CHECK(kb.lookup(Graph::path(4).relabel(perm)) == kb.lookup(Graph::path(4)));
  CHECK_FALSE(kb.lookup(Graph::complete(4)).has_value());
  CHECK_THROWS_AS(kb.lookup(Graph::empty(11)), CapExceeded);
  CHECK_THROWS_AS(make_fact(Graph::path(3), Status::Unknown, "x"), InvalidArgument);
}

TEST_CASE("seed knowledge base") {
  // Depends on the shipped seed file.
  const KnowledgeBase seed = KnowledgeBase::load(CDGRAPH_SEED_KB);
  CHECK(seed.size() == 5);
  const auto fact = seed.lookup(kDiameterThree);
  REQUIRE(fact.has_value());
  CHECK(fact->source == "sass Cor 5.5");
  CHECK(fact->status == Status::DoesNotOccur);
  CHECK(seed.lookup(Graph::path(4)).has_value());
  CHECK(seed.lookup(family_graph(5, true)).has_value());
  for (const Fact& f : seed.facts()) CHECK(f.status == Status::DoesNotOccur);
}

TEST_CASE("lookup is isomorphism-invariant") {
  std::vector<Fact> facts;
  for (const Graph& g : oracle::brute_classes(4)) facts.push_back(make_fact(g, Status::Occurs, format_graph6(g)));
  const KnowledgeBase kb = KnowledgeBase::from_facts(facts);
  CHECK(kb.size() == 11);
  std::mt19937 rng(3);
  for (const Graph& g : oracle::all_labeled(4)) {
    const auto expected = kb.lookup(g);
    REQUIRE(expected.has_value());
    REQUIRE(kb.lookup(g.relabel(oracle::random_permutation(4, rng))) == expected);
  }
}

TEST_CASE("save then load round-trips") {
  const KnowledgeBase seed = KnowledgeBase::load(CDGRAPH_SEED_KB);
  const KnowledgeBase bigger = seed.extended({make_fact(Graph::complete(4), Status::Occurs, "made up \"quoted\" source")});
  const auto path = std::filesystem::temp_directory_path() / "cdgraph_kb_roundtrip.jsonl";
  bigger.save(path);
  CHECK(KnowledgeBase::load(path) == bigger);
  CHECK(KnowledgeBase::parse(bigger.serialize()).serialize() == bigger.serialize());
  std::filesystem::remove(path);
}

TEST_CASE("extended enforces the conflict rule") {
  const KnowledgeBase kb = KnowledgeBase::from_facts({make_fact(Graph::path(4), Status::DoesNotOccur, "a")});
  CHECK_THROWS_AS(kb.extended({make_fact(Graph::path(4), Status::Occurs, "b")}), KnowledgeBaseError);
  CHECK(kb.extended({make_fact(Graph::path(4), Status::DoesNotOccur, "b")}).size() == 1);
}
