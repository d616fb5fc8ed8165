#pragma once

#include <cstdint>
#include <vector>

#include "wordrep/error.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"

// Literal, slow restatements of the definitions. They share nothing with
// the search kernels beyond the Graph and Orientation value types and
// serve as the independent route for certificate checks.

namespace wordrep::naive {

inline constexpr std::size_t kMaxNaiveEdges = 20;

/// Directed adjacency matrix of a total orientation.
inline std::vector<std::vector<bool>> arcs(const Orientation& o) {
  const auto n = o.base().order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < o.base().size(); ++i) {
    auto [u, v] = o.base().edges()[i];
    if (o.direction(i) == Direction::Forward) a[u][v] = true;
    if (o.direction(i) == Direction::Backward) a[v][u] = true;
  }
  return a;
}

namespace detail {

inline bool has_cycle_from(const std::vector<std::vector<bool>>& a, std::size_t v, std::vector<int>& colour) {
  colour[v] = 1;
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (!a[v][w]) continue;
    if (colour[w] == 1) return true;
    if (colour[w] == 0 && has_cycle_from(a, w, colour)) return true;
  }
  colour[v] = 2;
  return false;
}

// Extends `path` in every possible way; returns false once some path of at
// least four vertices has adjacent end points but a non-adjacent pair.
inline bool all_paths_ok(const Graph& g, const std::vector<std::vector<bool>>& a, std::vector<Vertex>& path) {
  if (path.size() >= 4 && g.adjacent(path.front(), path.back())) {
    for (std::size_t i = 0; i < path.size(); ++i)
      for (std::size_t j = i + 1; j < path.size(); ++j)
        if (!g.adjacent(path[i], path[j])) return false;
  }
  auto last = path.back();
  for (Vertex w = 0; w < g.order(); ++w) {
    if (!a[last][w]) continue;
    path.push_back(w);
    bool ok = all_paths_ok(g, a, path);
    path.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

inline bool is_acyclic(const Orientation& o) {
  auto a = arcs(o);
  std::vector<int> colour(a.size(), 0);
  for (std::size_t v = 0; v < a.size(); ++v)
    if (colour[v] == 0 && detail::has_cycle_from(a, v, colour)) return false;
  return true;
}

/// Acyclic, and every directed path v1..vk (k >= 4) with v1 adjacent to
/// vk has all pairs adjacent.
inline bool is_semi_transitive(const Orientation& o) {
  if (!o.is_total()) throw Error(ErrorKind::PartialOrientation, "orientation has unassigned edges");
  if (!naive::is_acyclic(o)) return false;
  auto a = arcs(o);
  std::vector<Vertex> path;
  for (Vertex v = 0; v < o.base().order(); ++v) {
    path.assign(1, v);
    if (!detail::all_paths_ok(o.base(), a, path)) return false;
  }
  return true;
}

/// Orientation number `mask` of g: bit i set means edge i is Backward.
inline Orientation orientation_from_mask(const Graph& g, std::uint64_t mask) {
  std::vector<Direction> dir(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) dir[i] = (mask >> i) & 1 ? Direction::Backward : Direction::Forward;
  return Orientation(g, std::move(dir));
}

/// Checks all 2^m orientations.
inline std::uint64_t count_semi_transitive(const Graph& g) {
  if (g.size() > kMaxNaiveEdges)
    throw Error(ErrorKind::TooManyEdges, "naive enumeration supports at most " + std::to_string(kMaxNaiveEdges) + " edges");
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask)
    if (naive::is_semi_transitive(orientation_from_mask(g, mask))) ++count;
  return count;
}

}  // namespace wordrep::naive
