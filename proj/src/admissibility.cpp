#include "cdgraph/admissibility.hpp"

#include "cdgraph/errors.hpp"

namespace cdgraph {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::Yes: return "yes";
    case Truth::No: return "no";
    case Truth::Unknown: return "unknown";
  }
  return "?";
}

namespace {

std::vector<Graph> delete_each_subset(const Graph& base, const std::vector<Edge>& pool) {
  if (pool.size() >= 16) throw CapExceeded("too many edges to enumerate subsets of");
  std::vector<Graph> out;
  const std::uint32_t count = 1u << pool.size();
  out.reserve(count - 1);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    std::vector<Edge> chosen;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if ((mask >> i) & 1u) chosen.push_back(pool[i]);
    out.push_back(delete_edges(base, chosen));
  }
  return out;
}

// Scans candidates in order: the first Occurs decides No, otherwise the
// first Unknown decides Unknown.
Verdict judge(const std::vector<Graph>& candidates, const KnowledgeBase& kb, int cap) {
  std::optional<BlockingWitness> first_unknown;
  for (const Graph& h : candidates) {
    Classification c = classify(h, kb, cap);
    if (c.status == Status::Occurs) return Verdict{Truth::No, BlockingWitness{h, std::move(c)}};
    if (c.status == Status::Unknown && !first_unknown) first_unknown = BlockingWitness{h, std::move(c)};
  }
  if (first_unknown) return Verdict{Truth::Unknown, std::move(first_unknown)};
  return Verdict{Truth::Yes, std::nullopt};
}

}  // namespace

std::vector<Graph> incident_edge_subgraphs(const Graph& g, Vertex v) {
  std::vector<Edge> incident;
  for (Vertex w : g.neighbors(v).members()) incident.emplace_back(v, w);
  return delete_each_subset(g, incident);
}

std::vector<Graph> neighbor_edge_subgraphs(const Graph& g, Vertex v) {
  const std::vector<Vertex> nbrs = g.neighbors(v).members();
  if (g.order() < 2) throw InvalidArgument("graph must have at least two vertices");
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Edge> spanned;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.adjacent(nbrs[i], nbrs[j])) spanned.emplace_back(shift(nbrs[i]), shift(nbrs[j]));
  if (spanned.empty()) return {};
  return delete_each_subset(delete_vertex(g, v), spanned);
}

Verdict is_admissible(const Graph& g, Vertex v, const KnowledgeBase& kb, int cap) {
  if (g.order() < 2) throw InvalidArgument("graph must have at least two vertices");
  if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  std::vector<Graph> candidates{delete_vertex(g, v)};
  for (Graph& h : incident_edge_subgraphs(g, v)) candidates.push_back(std::move(h));
  return judge(candidates, kb, cap);
}

Verdict is_strongly_admissible(const Graph& g, Vertex v, const KnowledgeBase& kb, int cap) {
  Verdict base = is_admissible(g, v, kb, cap);
  if (base.value == Truth::No) return base;
  Verdict extra = judge(neighbor_edge_subgraphs(g, v), kb, cap);
  if (extra.value == Truth::No) return extra;
  if (base.value == Truth::Unknown) return base;
  return extra;
}

}  // namespace cdgraph
