#include "cdgraph/palfy.hpp"

namespace cdgraph {

std::optional<Triple> palfy_witness(const Graph& g) {
  const int n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    // Candidates for the other two members: higher-labeled non-neighbors of u.
    const VertexSet far_u = g.vertices() - g.neighbors(u) - VertexSet::range(u + 1);
    for (Vertex v : far_u.members()) {
      const VertexSet far_uv = far_u - g.neighbors(v) - VertexSet::range(v + 1);
      if (!far_uv.empty()) return Triple{u, v, far_uv.members().front()};
    }
  }
  return std::nullopt;
}

bool satisfies_palfy(const Graph& g) { return !palfy_witness(g).has_value(); }

}  // namespace cdgraph
