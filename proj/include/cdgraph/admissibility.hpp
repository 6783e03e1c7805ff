#pragma once

#include <optional>
#include <vector>

#include "cdgraph/classifier.hpp"
#include "cdgraph/graph.hpp"
#include "cdgraph/knowledge_base.hpp"

namespace cdgraph {

enum class Truth { Yes, No, Unknown };

std::string to_string(Truth t);

/// Subgraph that kept a vertex from being (strongly) admissible.
struct BlockingWitness {
  Graph subgraph;
  Classification classification;
};

/// Yes carries no witness. No carries a subgraph classified Occurs, Unknown
/// one classified Unknown.
struct Verdict {
  Truth value = Truth::Unknown;
  std::optional<BlockingWitness> blocking;
};

/// Graphs from deleting each nonempty subset of v's incident edges. Subsets
/// follow a binary counter over the incident edges sorted by far endpoint;
/// vertices left isolated stay in the graph.
std::vector<Graph> incident_edge_subgraphs(const Graph& g, Vertex v);

/// Graphs from deleting v and then each nonempty subset of the edges that
/// joined two neighbors of v. Labels follow delete_vertex. Empty when v's
/// neighborhood spans no edge.
std::vector<Graph> neighbor_edge_subgraphs(const Graph& g, Vertex v);

/// v is admissible when g - v and every incident_edge_subgraph are
/// classified DoesNotOccur. Any Occurs gives No; otherwise any Unknown gives
/// Unknown. Requires g.order() >= 2.
Verdict is_admissible(const Graph& g, Vertex v, const KnowledgeBase& kb, int cap = kDefaultCanonicalCap);

/// Three-valued conjunction of is_admissible and every
/// neighbor_edge_subgraph being classified DoesNotOccur.
Verdict is_strongly_admissible(const Graph& g, Vertex v, const KnowledgeBase& kb,
                               int cap = kDefaultCanonicalCap);

}  // namespace cdgraph
