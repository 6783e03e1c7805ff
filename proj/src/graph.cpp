#include "cdgraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>

#include "cdgraph/errors.hpp"

namespace cdgraph {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctz(b));
  return out;
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) + " outside [1, " +
                          std::to_string(kMaxVertices) + "]");
  }
  for (const Edge& e : edges) {
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    adj_[e.u] |= static_cast<std::uint16_t>(1u << e.v);
    adj_[e.v] |= static_cast<std::uint16_t>(1u << e.u);
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  return Graph(n, es);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(__builtin_popcount(adj_[v]));
  return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] >> v) & 1u;
}

VertexSet Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return VertexSet(adj_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if ((adj_[u] >> v) & 1u) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabel(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidArgument("permutation has wrong length");
  VertexSet seen;
  for (Vertex p : perm) {
    check_vertex(p);
    if (seen.contains(p)) throw InvalidArgument("not a permutation");
    seen.insert(p);
  }
  Graph out;
  out.n_ = n_;
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if ((adj_[u] >> v) & 1u) out.adj_[perm[u]] |= static_cast<std::uint16_t>(1u << perm[v]);
  return out;
}

int degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v) {
  return g.neighbors(u) & g.neighbors(v);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    Vertex start = __builtin_ctz(unseen.bits());
    VertexSet comp = VertexSet::of({start});
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier.members()) next = next | g.neighbors(v);
      frontier = next - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u).members()) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_complete(const Graph& g, VertexSet s) {
  if ((s - g.vertices()) != VertexSet{}) throw InvalidArgument("vertex set not contained in graph");
  for (Vertex v : s.members()) {
    VertexSet others = s;
    others.erase(v);
    if ((g.neighbors(v) & others) != others) return false;
  }
  return true;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  if (g.order() < 2) throw InvalidArgument("deleting the only vertex would leave an empty graph");
  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (e.u != v && e.v != v) es.emplace_back(shift(e.u), shift(e.v));
  return Graph(g.order() - 1, es);
}

Graph delete_edges(const Graph& g, std::span<const Edge> es) {
  std::vector<Edge> kept = g.edges();
  for (const Edge& e : es) {
    auto it = std::find(kept.begin(), kept.end(), Edge(e.u, e.v));
    if (it == kept.end()) {
      throw InvalidArgument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                            " not present");
    }
    kept.erase(it);
  }
  return Graph(g.order(), kept);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Branch-and-bound over all relabelings. Position j of the relabeled graph
// fixes column j of the upper triangle, which is the next block of the
// bitstring, so any partial assignment whose prefix already exceeds the best
// found can be dropped without losing the minimum.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()), total_(pair_count(n_)) {
    for (int v = 0; v < n_; ++v) rows_[v] = g.neighbors(v).bits();
    best_ = upper_triangle_bits(g);
  }

  std::uint64_t run() {
    search(0, 0, VertexSet::range(n_).bits(), false);
    return best_;
  }

 private:
  void search(int pos, std::uint64_t prefix, std::uint16_t unused, bool below) {
    if (pos == n_) {
      if (below) best_ = prefix;
      return;
    }
    const int shift = total_ - pair_count(pos + 1);
    for (std::uint32_t rest = unused; rest != 0; rest &= rest - 1) {
      const Vertex v = __builtin_ctz(rest);
      const std::uint64_t best_prefix = best_ >> shift;
      std::uint64_t next = prefix;
      for (int i = 0; i < pos; ++i) next = (next << 1) | ((rows_[order_[i]] >> v) & 1u);
      bool now_below = below;
      if (!below) {
        if (next > best_prefix) continue;
        now_below = next < best_prefix;
      }
      order_[pos] = v;
      search(pos + 1, next, static_cast<std::uint16_t>(unused & ~(1u << v)), now_below);
      // best_ may have shrunk; a sibling that was below the old best is
      // only worth finishing if it is still not above the new one.
      if (now_below) below = false;
    }
  }

  int n_;
  int total_;
  std::array<std::uint16_t, Graph::kMaxVertices> rows_{};
  std::array<Vertex, Graph::kMaxVertices> order_{};
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t upper_triangle_bits(const Graph& g) {
  if (g.order() > kMaxCanonicalCap) throw CapExceeded("graph too large for a 64-bit encoding");
  std::uint64_t bits = 0;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u) bits = (bits << 1) | (g.adjacent(u, v) ? 1u : 0u);
  return bits;
}

Graph graph_from_upper_triangle(int n, std::uint64_t bits) {
  if (n > kMaxCanonicalCap) throw CapExceeded("graph too large for a 64-bit encoding");
  std::vector<Edge> es;
  int k = pair_count(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((bits >> --k) & 1u) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph graph_from_key(const CanonicalKey& key) { return graph_from_upper_triangle(key.n, key.bits); }

CanonicalKey canonical_key(const Graph& g, int cap) {
  if (cap > kMaxCanonicalCap) {
    throw InvalidArgument("canonicalization cap " + std::to_string(cap) + " above supported " +
                          std::to_string(kMaxCanonicalCap));
  }
  if (g.order() > cap) {
    throw CapExceeded("graph on " + std::to_string(g.order()) +
                      " vertices exceeds canonicalization cap " + std::to_string(cap));
  }
  return CanonicalKey{g.order(), Canonicalizer(g).run()};
}

bool are_isomorphic(const Graph& a, const Graph& b, int cap) {
  return canonical_key(a, cap) == canonical_key(b, cap);
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }
  int number() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), value);
    if (ec != std::errc{} || ptr == s_.data() + pos_) throw ParseError("expected a decimal number", pos_);
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return value;
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_edge_list(std::string_view text) {
  Scanner sc(text);
  const std::size_t n_pos = (sc.skip_space(), sc.pos());
  const int n = sc.number();
  if (n < 1 || n > Graph::kMaxVertices) {
    throw ParseError("vertex count must be in [1, " + std::to_string(Graph::kMaxVertices) + "]", n_pos);
  }
  sc.expect(';');
  std::vector<Edge> es;
  if (!sc.at_end()) {
    do {
      const std::size_t at = (sc.skip_space(), sc.pos());
      const int u = sc.number();
      sc.expect('-');
      const int v = sc.number();
      if (u >= n || v >= n) {
        throw ParseError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " has an endpoint outside 0.." + std::to_string(n - 1),
                         at);
      }
      if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), at);
      es.emplace_back(u, v);
    } while (sc.accept(','));
  }
  if (!sc.at_end()) throw ParseError("unexpected trailing text", sc.pos());
  return Graph(n, es);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + ";";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out += first ? " " : ", ";
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
    first = false;
  }
  return out;
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] < 63 || text[i] > 126) throw ParseError("byte outside graph6 range 63..126", i);
  }
  if (text[0] == 126) throw ParseError("graph6 multi-byte sizes (n > 62) are not supported", 0);
  const int n = text[0] - 63;
  if (n < 1 || n > Graph::kMaxVertices) {
    throw ParseError("graph6 size " + std::to_string(n) + " unsupported (need 1.." +
                         std::to_string(Graph::kMaxVertices) + ")",
                     0);
  }
  const int bits = pair_count(n);
  const std::size_t want = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != want) {
    throw ParseError("graph6 length " + std::to_string(text.size()) + ", expected " +
                         std::to_string(want),
                     std::min(text.size(), want));
  }
  std::vector<Edge> es;
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) es.emplace_back(u, v);
    }
  }
  // Padding bits must be zero for the encoding to be canonical.
  if (bits % 6 != 0) {
    const int last = text.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", text.size() - 1);
  }
  return Graph(n, es);
}

std::string format_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string format_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? format_graph6(g) : format_edge_list(g);
}

}  // namespace cdgraph
