#include "cdgraph/enumeration.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "json.hpp"

#include "cdgraph/classifier.hpp"
#include "cdgraph/errors.hpp"
#include "cdgraph/family.hpp"
#include "cdgraph/palfy.hpp"

namespace cdgraph {

namespace {

std::set<CanonicalKey> dedup_masks(int n, unsigned threads) {
  const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1) / 2);
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  std::vector<std::set<CanonicalKey>> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        for (std::uint64_t m = t; m < masks; m += threads)
          partial[t].insert(canonical_key(graph_from_upper_triangle(n, m), kMaxCanonicalCap));
      });
    }
  }
  std::set<CanonicalKey> merged;
  for (auto& s : partial) merged.merge(s);
  return merged;
}

std::set<CanonicalKey> extend_by_vertex(const std::vector<Graph>& smaller) {
  std::set<CanonicalKey> out;
  const int n = smaller.front().order() + 1;
  for (const Graph& h : smaller) {
    const std::vector<Edge> base = h.edges();
    for (std::uint32_t nbrs = 0; nbrs < (1u << (n - 1)); ++nbrs) {
      std::vector<Edge> es = base;
      for (Vertex u = 0; u < n - 1; ++u)
        if ((nbrs >> u) & 1u) es.emplace_back(u, n - 1);
      out.insert(canonical_key(Graph(n, es), kMaxCanonicalCap));
    }
  }
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(int n, const EnumerationOptions& opts) {
  if (n < 1) throw InvalidArgument("enumeration needs n >= 1");
  if (n > opts.max_n) {
    throw CapExceeded("enumeration of n = " + std::to_string(n) + " exceeds cap " + std::to_string(opts.max_n));
  }
  if (n > kMaxCanonicalCap) {
    throw CapExceeded("enumeration beyond " + std::to_string(kMaxCanonicalCap) + " vertices is unsupported");
  }
  const std::set<CanonicalKey> keys =
      n <= kMaskDedupLimit ? dedup_masks(n, opts.threads) : extend_by_vertex(all_graphs(n - 1, opts));
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const CanonicalKey& k : keys) out.push_back(graph_from_key(k));
  return out;
}

EnumerationReport enumerate_classify(int n, const KnowledgeBase& kb, bool palfy_only,
                                     const EnumerationOptions& opts) {
  EnumerationReport r;
  r.n = n;
  r.palfy_only = palfy_only;
  for (const Graph& g : all_graphs(n, opts)) {
    ++r.total_classes;
    const bool palfy = satisfies_palfy(g);
    if (palfy) ++r.palfy_count;
    if (palfy_only && !palfy) continue;
    const Classification c = classify(g, kb, kMaxCanonicalCap);
    ++r.verdict_histogram[c.status];
    if (c.family) r.family_members.push_back(canonical_key(g, kMaxCanonicalCap));
  }
  return r;
}

std::string to_json(const EnumerationReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["palfy_only"] = r.palfy_only;
  j["total_classes"] = r.total_classes;
  j["palfy_count"] = r.palfy_count;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (Status s : {Status::Occurs, Status::DoesNotOccur, Status::Unknown}) {
    auto it = r.verdict_histogram.find(s);
    hist[to_string(s)] = it == r.verdict_histogram.end() ? 0 : it->second;
  }
  j["verdict_histogram"] = hist;
  nlohmann::ordered_json fam = nlohmann::ordered_json::array();
  for (const CanonicalKey& k : r.family_members) fam.push_back(format_graph6(graph_from_key(k)));
  j["family_members"] = fam;
  return j.dump(2);
}

}  // namespace cdgraph
