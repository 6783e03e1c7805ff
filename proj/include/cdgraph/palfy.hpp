#pragma once

#include <array>
#include <optional>

#include "cdgraph/graph.hpp"

namespace cdgraph {

using Triple = std::array<Vertex, 3>;

/// Every 3-subset of vertices spans at least one edge. Vacuous for n < 3.
bool satisfies_palfy(const Graph& g);

/// Lexicographically first independent triple, or nullopt when none exists.
std::optional<Triple> palfy_witness(const Graph& g);

}  // namespace cdgraph
