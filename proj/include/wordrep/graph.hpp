#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/error.hpp"

namespace wordrep {

// Vertices are stored 0-based; everything printed or parsed is 1-based.
using Vertex = std::uint32_t;
using VertexSet = std::uint32_t;

inline constexpr std::size_t kMaxVertices = 32;

inline constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

inline int popcount(VertexSet s) { return std::popcount(s); }

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 (printed as 1..n).
///
/// Adjacency is one bitmask per vertex; the edge list is kept sorted
/// lexicographically and an n*n table maps vertex pairs to edge indices.
/// Instances are immutable once built.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : Graph(std::vector<VertexSet>(check_order(n), 0)) {}

  /// Builds from symmetric adjacency masks. Rejects loops and asymmetry.
  static Graph from_adjacency(std::vector<VertexSet> adj) { return Graph(std::move(adj)); }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  VertexSet all_vertices() const noexcept {
    return order() == 32 ? ~VertexSet{0} : (bit(static_cast<Vertex>(order())) - 1);
  }

  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  std::span<const VertexSet> adjacency() const noexcept { return adj_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] & bit(v)) != 0; }
  int degree(Vertex v) const { return popcount(adj_[v]); }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
  }

  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const {
    auto idx = index_[u * order() + v];
    if (idx < 0) return std::nullopt;
    return static_cast<std::size_t>(idx);
  }

  bool is_complete() const { return size() == order() * (order() - 1) / 2; }

  bool is_connected() const {
    VertexSet seen = bit(0);
    VertexSet frontier = bit(0);
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all_vertices();
  }

  /// Induced subgraph on the vertices in `keep`, relabelled to 0..|keep|-1
  /// preserving their relative order.
  Graph induced(VertexSet keep) const {
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < order(); ++v)
      if (keep & bit(v)) kept.push_back(v);
    std::vector<VertexSet> adj(kept.size(), 0);
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (adjacent(kept[i], kept[j])) adj[i] |= bit(static_cast<Vertex>(j));
    return Graph(std::move(adj));
  }

  Graph without_vertex(Vertex v) const { return induced(all_vertices() & ~bit(v)); }

  /// Relabelled copy: vertex `perm[p]` of this graph becomes vertex p.
  Graph relabelled(std::span<const Vertex> perm) const {
    std::vector<VertexSet> adj(order(), 0);
    for (std::size_t p = 0; p < order(); ++p)
      for (std::size_t q = 0; q < order(); ++q)
        if (adjacent(perm[p], perm[q])) adj[p] |= bit(static_cast<Vertex>(q));
    return Graph(std::move(adj));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {
    check_order(adj_.size());
    const auto n = adj_.size();
    for (Vertex u = 0; u < n; ++u) {
      if (adj_[u] & bit(u)) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u + 1));
      if (n < 32 && (adj_[u] >> n) != 0)
        throw Error(ErrorKind::OutOfRange, "neighbour beyond vertex count");
      for (Vertex v = u + 1; v < n; ++v) {
        bool uv = adj_[u] & bit(v);
        bool vu = adj_[v] & bit(u);
        if (uv != vu) throw Error(ErrorKind::OutOfRange, "asymmetric adjacency");
        if (uv) edges_.push_back({u, v});
      }
    }
    index_.assign(n * n, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      index_[u * n + v] = index_[v * n + u] = static_cast<int>(i);
    }
  }

  static std::size_t check_order(std::size_t n) {
    if (n < 1) throw Error(ErrorKind::OutOfRange, "graph needs at least one vertex");
    if (n > kMaxVertices)
      throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxVertices) + " vertices");
    return n;
  }

  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
  std::vector<int> index_;
};

/// Builds a graph from 1-based vertex pairs. Duplicate pairs collapse.
inline Graph graph_from_edge_list(std::size_t n,
                                  std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  if (n < 1 || n > kMaxVertices)
    throw Error(n < 1 ? ErrorKind::OutOfRange : ErrorKind::TooLarge,
                "vertex count " + std::to_string(n));
  std::vector<VertexSet> adj(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw Error(ErrorKind::OutOfRange,
                  "edge " + std::to_string(a) + " " + std::to_string(b) + " outside 1.." +
                      std::to_string(n));
    if (a == b) throw Error(ErrorKind::SelfLoop, "edge " + std::to_string(a) + " " + std::to_string(b));
    auto u = static_cast<Vertex>(a - 1);
    auto v = static_cast<Vertex>(b - 1);
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return Graph::from_adjacency(std::move(adj));
}

inline Graph graph_from_edge_list(std::size_t n,
                                  std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> v(pairs);
  return graph_from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(v));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<VertexSet> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) adj[v] = ((n == 32 ? ~VertexSet{0} : bit(static_cast<Vertex>(n)) - 1)) & ~bit(v);
  return Graph::from_adjacency(std::move(adj));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i) pairs.emplace_back(i, i % n + 1);
  return graph_from_edge_list(n, std::span<const std::pair<std::size_t, std::size_t>>(pairs));
}

/// A 4-cycle a-b-c-d-a. Stored with the smallest vertex first and the
/// smaller of its two cycle neighbours second.
using FourCycle = std::array<Vertex, 4>;

inline std::vector<FourCycle> four_cycles(const Graph& g) {
  std::vector<FourCycle> out;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex a = 0; a < n; ++a) {
    VertexSet above = g.all_vertices() & ~((bit(a) << 1) - 1);
    VertexSet nbrs = g.neighbors(a) & above;
    for (VertexSet bs = nbrs; bs; bs &= bs - 1) {
      Vertex b = std::countr_zero(bs);
      for (VertexSet ds = nbrs & ~((bit(b) << 1) - 1); ds; ds &= ds - 1) {
        Vertex d = std::countr_zero(ds);
        VertexSet cs = g.neighbors(b) & g.neighbors(d) & above & ~bit(b) & ~bit(d);
        for (; cs; cs &= cs - 1) out.push_back({a, b, static_cast<Vertex>(std::countr_zero(cs)), d});
      }
    }
  }
  return out;
}

inline bool is_k4_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    VertexSet common = g.neighbors(u) & g.neighbors(v);
    for (VertexSet cs = common; cs; cs &= cs - 1)
      if (g.neighbors(std::countr_zero(cs)) & common) return false;
  }
  return true;
}

/// Vertex colouring with colours 1..c, indexed by 0-based vertex.
struct VertexColoring {
  std::vector<int> color;

  int num_colors() const {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
  }

  bool is_proper(const Graph& g) const {
    if (color.size() != g.order()) return false;
    for (auto [u, v] : g.edges())
      if (color[u] == color[v]) return false;
    return true;
  }
};

}  // namespace wordrep
