#include "cdgraph/family.hpp"

#include <vector>

#include "cdgraph/errors.hpp"
#include "cdgraph/palfy.hpp"

namespace cdgraph {

FamilyLabeling family_labeling(int k, bool bridge) {
  if (k < kMinFamilyOrder) {
    throw InvalidArgument("family graphs need k >= 5 vertices, got " + std::to_string(k));
  }
  if (k > Graph::kMaxVertices) {
    throw InvalidArgument("family graph on " + std::to_string(k) + " vertices exceeds the " +
                          std::to_string(Graph::kMaxVertices) + "-vertex graph limit");
  }
  return FamilyLabeling{0, 1, 2, 3, VertexSet::range(k) - VertexSet::range(4), bridge};
}

Graph family_graph(int k, bool bridge) {
  const FamilyLabeling l = family_labeling(k, bridge);
  std::vector<Edge> es{{l.p1, l.p2}, {l.p1, l.q1}, {l.p2, l.q2}};
  if (bridge) es.emplace_back(l.q1, l.q2);
  const std::vector<Vertex> rest = l.others.members();
  for (std::size_t i = 0; i < rest.size(); ++i) {
    es.emplace_back(l.q1, rest[i]);
    es.emplace_back(l.q2, rest[i]);
    for (std::size_t j = i + 1; j < rest.size(); ++j) es.emplace_back(rest[i], rest[j]);
  }
  return Graph(k, es);
}

std::optional<FamilyLabeling> is_in_family(const Graph& g) {
  if (g.order() < kMinFamilyOrder || !satisfies_palfy(g)) return std::nullopt;
  for (Vertex p1 = 0; p1 < g.order(); ++p1) {
    if (degree(g, p1) != 2) continue;
    for (Vertex p2 : g.neighbors(p1).members()) {
      if (degree(g, p2) != 2 || !common_neighbors(g, p1, p2).empty()) continue;
      VertexSet n1 = g.neighbors(p1);
      n1.erase(p2);
      VertexSet n2 = g.neighbors(p2);
      n2.erase(p1);
      FamilyLabeling l;
      l.p1 = p1;
      l.p2 = p2;
      l.q1 = n1.members().front();
      l.q2 = n2.members().front();
      l.others = g.vertices() - VertexSet::of({l.p1, l.p2, l.q1, l.q2});
      l.bridge = g.adjacent(l.q1, l.q2);
      return l;
    }
  }
  return std::nullopt;
}

}  // namespace cdgraph
