#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "k2free/bitset.hpp"
#include "k2free/vertex_set.hpp"

namespace k2free {

using Edge = std::pair<Vertex, Vertex>;

struct Subgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Keeps both sorted adjacency lists and a bit-matrix so that adjacency
/// tests are O(1) and neighbourhood intersections are word-parallel. The
/// matrix costs n^2/8 bytes, which bounds n at kMaxVertices.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 30000;

  Graph() = default;

  /// Throws DomainError on self-loops, duplicates (in either orientation),
  /// out-of-range endpoints or n > kMaxVertices.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph star(std::size_t leaves);
  static Graph complete_bipartite(std::size_t left, std::size_t right);
  static Graph empty(std::size_t n);

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return m_; }
  std::size_t min_degree() const noexcept { return min_degree_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  VertexSet neighborhood(Vertex v) const;
  const Bitset& row(Vertex v) const { return rows_[v]; }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].test(v); }

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool is_complete() const noexcept;
  Graph complement() const;
  Subgraph induced(const VertexSet& keep) const;

  Bitset mask_of(const VertexSet& s) const;
  Bitset all_vertices() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Bitset> rows_;
  std::size_t m_ = 0;
  std::size_t min_degree_ = 0;
  std::size_t max_degree_ = 0;
};

/// Induced subgraph relabelled to 0..k-1; `to_parent[i]` is the id of local
/// vertex i in the host graph (increasing).
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  VertexSet lift(const VertexSet& local) const;
};

}  // namespace k2free
