#include "cdgraph/classifier.hpp"

#include "cdgraph/errors.hpp"

namespace cdgraph {

namespace {

const char* kPalfyCitation = "Palfy's condition: among any three vertices some edge joins two of them";
const char* kFamilyCitation =
    "Theorem 3.1: a Palfy graph on k >= 5 vertices with adjacent degree-two vertices p1, p2 "
    "sharing no common neighbor is not the degree graph of a solvable group";

std::string describe(const Triple& t) {
  return "vertices {" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + "} span no edge";
}

std::string describe(const FamilyLabeling& l) {
  std::string others;
  for (Vertex v : l.others.members()) others += (others.empty() ? "" : ",") + std::to_string(v);
  return "p1=" + std::to_string(l.p1) + " p2=" + std::to_string(l.p2) + " q1=" + std::to_string(l.q1) +
         " q2=" + std::to_string(l.q2) + " others={" + others + "} bridge=" + (l.bridge ? "yes" : "no");
}

}  // namespace

Classification classify(const Graph& g, const KnowledgeBase& kb, int cap) {
  if (g.order() > cap) {
    throw CapExceeded("graph on " + std::to_string(g.order()) + " vertices exceeds cap " +
                      std::to_string(cap));
  }
  Classification c;

  if ((c.palfy_violation = palfy_witness(g))) {
    c.status = Status::DoesNotOccur;
    c.provenance.push_back({rules::kPalfy, kPalfyCitation, describe(*c.palfy_violation)});
  } else if ((c.family = is_in_family(g))) {
    c.status = Status::DoesNotOccur;
    c.provenance.push_back({rules::kFamily, kFamilyCitation, describe(*c.family)});
  }

  // The KB is consulted even after a theorem verdict so that contradicting
  // data is reported rather than silently shadowed.
  if (const std::optional<Fact> fact = kb.lookup(g, cap)) {
    if (c.status != Status::Unknown && fact->status != c.status) {
      throw KnowledgeBaseError("knowledge base says " + to_string(fact->status) + " (" + fact->source +
                               ") for " + format_graph6(g) + ", but rule " + c.provenance.front().rule +
                               " proves " + to_string(c.status));
    }
    if (c.status == Status::Unknown) c.status = fact->status;
    c.provenance.push_back({rules::kKnowledgeBase, fact->source,
                            "graph6 " + format_graph6(graph_from_key(fact->key)) + " marked " +
                                to_string(fact->status)});
  }
  return c;
}

std::string explain(const Classification& c) {
  if (c.provenance.empty()) return "unknown: no applicable rule\n";
  std::string out;
  for (const ProvenanceEntry& e : c.provenance) {
    out += "[" + e.rule + "] " + to_string(c.status) + ": " + e.citation;
    if (!e.detail.empty()) out += " (" + e.detail + ")";
    out += '\n';
  }
  return out;
}

}  // namespace cdgraph
