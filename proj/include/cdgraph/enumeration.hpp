#pragma once

#include <map>
#include <string>
#include <vector>

#include "cdgraph/graph.hpp"
#include "cdgraph/knowledge_base.hpp"

namespace cdgraph {

inline constexpr int kDefaultEnumerationCap = 7;
// Up to this order, classes come from deduplicating every labeled graph;
// above it, from extending each class one vertex at a time.
inline constexpr int kMaskDedupLimit = 6;

struct EnumerationOptions {
  int max_n = kDefaultEnumerationCap;
  /// Workers for the mask scan. Output does not depend on this.
  unsigned threads = 1;
};

/// One representative per isomorphism class on n vertices, each equal to
/// graph_from_key of its class key, in ascending key order.
/// Throws CapExceeded when n > opts.max_n, InvalidArgument when n < 1.
std::vector<Graph> all_graphs(int n, const EnumerationOptions& opts = {});

struct EnumerationReport {
  int n = 0;
  bool palfy_only = false;
  std::size_t total_classes = 0;
  std::size_t palfy_count = 0;
  /// Sums to palfy_count when palfy_only, else to total_classes.
  std::map<Status, std::size_t> verdict_histogram;
  std::vector<CanonicalKey> family_members;
};

EnumerationReport enumerate_classify(int n, const KnowledgeBase& kb, bool palfy_only,
                                     const EnumerationOptions& opts = {});

/// Single JSON document; keys appear as graph6 strings.
std::string to_json(const EnumerationReport& r);

}  // namespace cdgraph
