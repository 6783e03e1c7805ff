#include "cdgraph/knowledge_base.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cdgraph/errors.hpp"

namespace cdgraph {

using json = nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::Occurs: return "occurs";
    case Status::DoesNotOccur: return "not_occurs";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

namespace {

Status parse_status(const std::string& s) {
  if (s == "occurs") return Status::Occurs;
  if (s == "not_occurs") return Status::DoesNotOccur;
  throw KnowledgeBaseError("status must be \"occurs\" or \"not_occurs\", got \"" + s + "\"");
}

}  // namespace

Fact make_fact(const Graph& g, Status status, std::string source, int cap) {
  if (status == Status::Unknown) throw InvalidArgument("a fact cannot assert Unknown");
  return Fact{canonical_key(g, cap), status, std::move(source)};
}

void KnowledgeBase::insert(Fact fact, const std::string& where) {
  if (fact.status == Status::Unknown) throw KnowledgeBaseError(where + "a fact cannot assert Unknown");
  auto [it, inserted] = facts_.try_emplace(fact.key, fact);
  if (!inserted && it->second.status != fact.status) {
    throw KnowledgeBaseError(where + "conflicting statuses for graph " +
                             format_graph6(graph_from_key(fact.key)) + ": \"" + it->second.source +
                             "\" says " + to_string(it->second.status) + ", \"" + fact.source +
                             "\" says " + to_string(fact.status));
  }
}

KnowledgeBase KnowledgeBase::parse(std::string_view jsonl, int cap) {
  KnowledgeBase kb;
  std::istringstream in{std::string(jsonl)};
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Fact fact;
    try {
      const json record = json::parse(line);
      if (!record.is_object()) throw KnowledgeBaseError("record is not a JSON object");
      const Graph g = parse_graph6(record.at("graph6").get<std::string>());
      if (g.order() > cap) {
        throw KnowledgeBaseError("graph on " + std::to_string(g.order()) +
                                 " vertices exceeds canonicalization cap " + std::to_string(cap));
      }
      fact.key = canonical_key(g, cap);
      fact.status = parse_status(record.at("status").get<std::string>());
      fact.source = record.at("source").get<std::string>();
    } catch (const json::exception& e) {
      throw KnowledgeBaseError(where + e.what());
    } catch (const Error& e) {
      throw KnowledgeBaseError(where + e.what());
    }
    kb.insert(std::move(fact), where);
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load(const std::filesystem::path& path, int cap) {
  std::ifstream in(path);
  if (!in) throw KnowledgeBaseError("cannot open knowledge base " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse(buf.str(), cap);
  } catch (const KnowledgeBaseError& e) {
    throw KnowledgeBaseError(path.string() + ": " + e.what());
  }
}

KnowledgeBase KnowledgeBase::from_facts(const std::vector<Fact>& facts) {
  return KnowledgeBase{}.extended(facts);
}

KnowledgeBase KnowledgeBase::extended(const std::vector<Fact>& extra) const {
  KnowledgeBase kb = *this;
  for (const Fact& f : extra) kb.insert(f, "");
  return kb;
}

std::string KnowledgeBase::serialize() const {
  std::string out;
  for (const auto& [key, fact] : facts_) {
    nlohmann::ordered_json record;
    record["graph6"] = format_graph6(graph_from_key(key));
    record["status"] = to_string(fact.status);
    record["source"] = fact.source;
    out += record.dump();
    out += '\n';
  }
  return out;
}

void KnowledgeBase::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw KnowledgeBaseError("cannot write knowledge base " + path.string());
  out << serialize();
  if (!out) throw KnowledgeBaseError("write failed for " + path.string());
}

std::optional<Fact> KnowledgeBase::lookup(const CanonicalKey& key) const {
  auto it = facts_.find(key);
  if (it == facts_.end()) return std::nullopt;
  return it->second;
}

std::optional<Fact> KnowledgeBase::lookup(const Graph& g, int cap) const {
  return lookup(canonical_key(g, cap));
}

std::vector<Fact> KnowledgeBase::facts() const {
  std::vector<Fact> out;
  out.reserve(facts_.size());
  for (const auto& [key, fact] : facts_) out.push_back(fact);
  return out;
}

}  // namespace cdgraph
