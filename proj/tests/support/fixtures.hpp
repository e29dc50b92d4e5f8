#pragma once

#include <initializer_list>

#include "k2free/graph.hpp"

namespace k2free::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::vector<Edge>(edges));
}

/// Triangle 0,1,2 with pendant path 2-3-4.
inline Graph triangle_with_tail() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}); }

/// Triangles 0,1,2 and 2,3,4.
inline Graph bowtie() { return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

/// K4 without the edge {2,3}.
inline Graph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace k2free::testing
