#pragma once

#include "wordrep/graph.hpp"

// Named graphs, 1-based labels as drawn.

namespace wordrep::catalog {

/// The 7-vertex, 12-edge graph of maximum degree 4 with no
/// semi-transitive orientation.
inline Graph graph_a() {
  return graph_from_edge_list(7, {{1, 2}, {1, 3}, {1, 6}, {2, 4}, {2, 5}, {7, 3},
                                  {7, 4}, {7, 5}, {7, 6}, {3, 4}, {4, 5}, {5, 6}});
}

/// K4 minus the edges 13 and 14; represented by 1213423.
inline Graph graph_m() { return graph_from_edge_list(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

/// Outer 5-cycle 1..5, spokes i -- i+5, inner pentagram on 6..10.
inline Graph petersen() {
  return graph_from_edge_list(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1},
                                   {1, 6}, {2, 7}, {3, 8}, {4, 9}, {5, 10},
                                   {6, 8}, {8, 10}, {10, 7}, {7, 9}, {9, 6}});
}

inline Graph k4() { return complete_graph(4); }
inline Graph c4() { return cycle_graph(4); }
inline Graph c5() { return cycle_graph(5); }

/// Wheel: a cycle on 1..rim with a hub joined to every rim vertex.
inline Graph wheel(std::size_t rim) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= rim; ++i) {
    pairs.emplace_back(i, i % rim + 1);
    pairs.emplace_back(i, rim + 1);
  }
  return graph_from_edge_list(rim + 1, std::span<const std::pair<std::size_t, std::size_t>>(pairs));
}

}  // namespace wordrep::catalog
