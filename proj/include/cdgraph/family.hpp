#pragma once

#include <optional>

#include "cdgraph/graph.hpp"

namespace cdgraph {

/// Names the roles of a forbidden-family graph's vertices.
///
/// p1 and p2 are the adjacent degree-two vertices, q1 and q2 their other
/// neighbors, and `others` everything else. `bridge` records the optional
/// q1-q2 edge.
struct FamilyLabeling {
  Vertex p1 = 0;
  Vertex p2 = 0;
  Vertex q1 = 0;
  Vertex q2 = 0;
  VertexSet others;
  bool bridge = false;

  friend bool operator==(const FamilyLabeling&, const FamilyLabeling&) = default;
};

inline constexpr int kMinFamilyOrder = 5;

/// Member of the family on k vertices, labeled 0=p1, 1=p2, 2=q1, 3=q2 and
/// 4..k-1 for the rest. Each of the rest is adjacent to q1, q2 and every
/// other vertex of the rest. Throws InvalidArgument for k < 5.
Graph family_graph(int k, bool bridge);

/// The labeling used by family_graph(k, bridge).
FamilyLabeling family_labeling(int k, bool bridge);

/// Checks the theorem hypotheses: at least five vertices, Palfy's condition,
/// and an adjacent pair of degree-two vertices with no common neighbor.
/// Ordered pairs (p1, p2) are tried lexicographically; the first match wins.
std::optional<FamilyLabeling> is_in_family(const Graph& g);

}  // namespace cdgraph
