#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdgraph {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of {0, ..., 15} with bitmask semantics.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint16_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static constexpr VertexSet range(int n) {
    return VertexSet(static_cast<std::uint16_t>((1u << n) - 1u));
  }

  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr void insert(Vertex v) { bits_ |= static_cast<std::uint16_t>(1u << v); }
  constexpr void erase(Vertex v) { bits_ &= static_cast<std::uint16_t>(~(1u << v)); }
  int size() const { return __builtin_popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }

  /// Members in increasing order.
  std::vector<Vertex> members() const;

  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(static_cast<std::uint16_t>(bits_ & o.bits_));
  }
  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(static_cast<std::uint16_t>(bits_ | o.bits_));
  }
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(static_cast<std::uint16_t>(bits_ & ~o.bits_));
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Values are immutable once built; surgery operations return new graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  /// Builds a graph, normalizing and deduplicating edges.
  /// Throws InvalidArgument for n outside [1, kMaxVertices], self-loops,
  /// or endpoints >= n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  static Graph empty(int n) { return Graph(n, std::span<const Edge>{}); }
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(Vertex u, Vertex v) const;
  VertexSet neighbors(Vertex v) const;

  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  /// Graph whose vertex `perm[i]` corresponds to vertex i of this graph.
  Graph relabel(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> adj_{};
};

int degree(const Graph& g, Vertex v);
VertexSet common_neighbors(const Graph& g, Vertex u, Vertex v);
std::vector<VertexSet> connected_components(const Graph& g);

/// Largest shortest-path distance; nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);

bool is_complete(const Graph& g, VertexSet s);

/// Removes v and shifts higher labels down by one. Requires g.order() >= 2.
Graph delete_vertex(const Graph& g, Vertex v);

/// Removes the listed edges; each must be present in g.
Graph delete_edges(const Graph& g, std::span<const Edge> es);

// ---------------------------------------------------------------------------
// Isomorphism

inline constexpr int kDefaultCanonicalCap = 10;
// Upper-triangle bitstring must fit one 64-bit word.
inline constexpr int kMaxCanonicalCap = 11;

/// Upper-triangle adjacency bitstring of the permutation-minimal relabeling.
///
/// Pairs are taken column by column, (0,1), (0,2), (1,2), (0,3), ..., the
/// same order graph6 uses. The first pair occupies the most significant of
/// the n(n-1)/2 low bits, so numeric order on `bits` is lexicographic order
/// on the bitstring.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.bits * 31u + static_cast<std::uint64_t>(k.n));
  }
};

/// Throws CapExceeded when g.order() > cap, InvalidArgument when cap is
/// above kMaxCanonicalCap.
CanonicalKey canonical_key(const Graph& g, int cap = kDefaultCanonicalCap);
bool are_isomorphic(const Graph& a, const Graph& b, int cap = kDefaultCanonicalCap);

/// Upper-triangle bitstring of g as labeled (no minimization).
std::uint64_t upper_triangle_bits(const Graph& g);
Graph graph_from_upper_triangle(int n, std::uint64_t bits);
/// Graph whose labeled encoding is the key (the canonical representative).
Graph graph_from_key(const CanonicalKey& key);

// ---------------------------------------------------------------------------
// Text formats

enum class GraphFormat { EdgeList, Graph6 };

/// Edge list: "n; u-v, u-v, ..." with decimal labels. Whitespace is free.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

/// graph6 (single-byte size header, so n <= 62).
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

}  // namespace cdgraph
