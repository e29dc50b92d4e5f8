#include "k2free/graph.hpp"

#include <algorithm>
#include <sstream>

#include "k2free/error.hpp"

namespace k2free {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxVertices) {
    throw DomainError("graph has " + std::to_string(n) + " vertices; limit is " +
                      std::to_string(kMaxVertices));
  }
  Graph g;
  g.adjacency_.assign(n, {});
  g.rows_.assign(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream os;
      os << "edge {" << u << "," << v << "} has an endpoint outside 0.." << (n == 0 ? 0 : n - 1);
      throw DomainError(os.str());
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (g.rows_[u].test(v)) {
      std::ostringstream os;
      os << "duplicate edge {" << u << "," << v << "}";
      throw DomainError(os.str());
    }
    g.rows_[u].set(v);
    g.rows_[v].set(u);
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.m_ = edges.size();
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(g.adjacency_.begin(), g.adjacency_.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    g.min_degree_ = lo->size();
    g.max_degree_ = hi->size();
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return from_edges(n, edges);
}

Graph Graph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return from_edges(n, edges);
}

Graph Graph::cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  if (n >= 3) edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return from_edges(n, edges);
}

Graph Graph::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return from_edges(leaves + 1, edges);
}

Graph Graph::complete_bipartite(std::size_t left, std::size_t right) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < left; ++u) {
    for (std::size_t j = 0; j < right; ++j) edges.emplace_back(u, static_cast<Vertex>(left + j));
  }
  return from_edges(left + right, edges);
}

Graph Graph::empty(std::size_t n) { return from_edges(n, {}); }

VertexSet Graph::neighborhood(Vertex v) const { return VertexSet::from_sorted(adjacency_[v]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::is_complete() const noexcept {
  const std::size_t k = n();
  return m_ == k * (k - (k > 0 ? 1 : 0)) / 2;
}

Graph Graph::complement() const {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v = u + 1; v < n(); ++v) {
      if (!has_edge(u, v)) edges.emplace_back(u, v);
    }
  }
  return from_edges(n(), edges);
}

Subgraph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> local(n(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Vertex u = keep[i];
    for (Vertex v : adjacency_[u]) {
      if (v > u && local[v] != static_cast<Vertex>(-1)) edges.emplace_back(static_cast<Vertex>(i), local[v]);
    }
  }
  return Subgraph{from_edges(keep.size(), edges), keep.vector()};
}

Bitset Graph::mask_of(const VertexSet& s) const {
  Bitset b(n());
  for (Vertex v : s) b.set(v);
  return b;
}

Bitset Graph::all_vertices() const {
  Bitset b(n());
  b.set_all();
  return b;
}

VertexSet Subgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  return VertexSet::from_sorted(std::move(out));
}

}  // namespace k2free
