#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdgraph/family.hpp"
#include "cdgraph/graph.hpp"
#include "cdgraph/knowledge_base.hpp"
#include "cdgraph/palfy.hpp"

namespace cdgraph {

namespace rules {
inline constexpr const char* kPalfy = "R1-palfy";
inline constexpr const char* kFamily = "R2-family";
inline constexpr const char* kKnowledgeBase = "R3-kb";
}  // namespace rules

struct ProvenanceEntry {
  std::string rule;
  std::string citation;
  /// Instance-specific evidence: the violating triple, the family labeling,
  /// or the matched KB record.
  std::string detail;

  friend bool operator==(const ProvenanceEntry&, const ProvenanceEntry&) = default;
};

struct Classification {
  Status status = Status::Unknown;
  /// Rules that fired, in evaluation order. The first decides `status`.
  std::vector<ProvenanceEntry> provenance;
  std::optional<Triple> palfy_violation;
  std::optional<FamilyLabeling> family;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Rules run in order: Palfy's condition, the forbidden family, then the
/// knowledge base. The first definite verdict wins. The engine itself only
/// ever concludes DoesNotOccur; Occurs can only come from a KB fact.
///
/// Throws KnowledgeBaseError when a KB fact says Occurs for a graph the
/// theorem rules reject, and CapExceeded when g is above the cap.
Classification classify(const Graph& g, const KnowledgeBase& kb, int cap = kDefaultCanonicalCap);

/// One line per fired rule, or "unknown: no applicable rule".
std::string explain(const Classification& c);

}  // namespace cdgraph
