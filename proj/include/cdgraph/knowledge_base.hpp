#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdgraph {

/// Whether a graph occurs as the character degree graph of a solvable group.
enum class Status { Occurs, DoesNotOccur, Unknown };

std::string to_string(Status s);

/// A literature assertion about one isomorphism class. Never Unknown.
struct Fact {
  CanonicalKey key;
  Status status = Status::DoesNotOccur;
  std::string source;

  friend bool operator==(const Fact&, const Fact&) = default;
};

/// Immutable map from isomorphism class to Fact.
///
/// On disk this is JSON lines, one record per line:
///   {"graph6": "Cr", "status": "not_occurs", "source": "..."}
/// with status "occurs" or "not_occurs". Blank lines are skipped. Records
/// for the same class must agree on status; the first source is kept.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  /// Throws KnowledgeBaseError on unreadable files, malformed lines (the
  /// message names the line), conflicting duplicates or oversize graphs.
  static KnowledgeBase load(const std::filesystem::path& path, int cap = kDefaultCanonicalCap);
  static KnowledgeBase parse(std::string_view jsonl, int cap = kDefaultCanonicalCap);
  static KnowledgeBase from_facts(const std::vector<Fact>& facts);

  /// Canonical records sorted by key.
  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

  /// New knowledge base holding these facts plus `extra`, with the same
  /// conflict rules as loading.
  KnowledgeBase extended(const std::vector<Fact>& extra) const;

  std::optional<Fact> lookup(const Graph& g, int cap = kDefaultCanonicalCap) const;
  std::optional<Fact> lookup(const CanonicalKey& key) const;

  std::size_t size() const { return facts_.size(); }
  bool empty() const { return facts_.empty(); }
  std::vector<Fact> facts() const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;

 private:
  void insert(Fact fact, const std::string& where);

  std::map<CanonicalKey, Fact> facts_;
};

/// Makes a Fact for g's isomorphism class.
Fact make_fact(const Graph& g, Status status, std::string source, int cap = kDefaultCanonicalCap);

}  // namespace cdgraph
