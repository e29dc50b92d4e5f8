#pragma once

#include <cstddef>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

/// Components of G \ removed, ordered by smallest member.
struct ComponentSplit {
  VertexSet removed;
  std::vector<VertexSet> components;
  std::size_t trivial_count = 0;
  std::vector<std::size_t> nontrivial_indices;

  std::size_t count() const noexcept { return components.size(); }
};

/// Components of the subgraph induced on `within`, ordered by smallest
/// member.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

/// Throws PreconditionError(kEmptyRemainder) when S covers V(G).
ComponentSplit components_after_removal(const Graph& g, const VertexSet& s);

/// Every x in S is adjacent to v. Vacuously true for empty S. Throws
/// DomainError if v is in S.
bool is_universal_vertex(const Graph& g, const VertexSet& s, Vertex v);

/// Every x in S is adjacent to u or v. {u,v} must be an edge with both
/// endpoints outside S.
bool is_universal_edge(const Graph& g, const VertexSet& s, Vertex u, Vertex v);

struct SubsetClass {
  bool independent = false;
  bool clique = false;
  bool connected = false;

  friend bool operator==(const SubsetClass&, const SubsetClass&) = default;
};

/// Throws DomainError for empty S.
SubsetClass classify_subset(const Graph& g, const VertexSet& s);

struct GraphPredicates {
  bool connected = false;
  bool bipartite = false;
  bool acyclic = false;

  friend bool operator==(const GraphPredicates&, const GraphPredicates&) = default;
};

GraphPredicates graph_predicates(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

/// Two-colouring by BFS (smallest unvisited vertex starts each component
/// with colour 0). Empty when G is not bipartite.
std::vector<int> bipartition(const Graph& g);

/// G \ S has at least two components.
bool is_separator(const Graph& g, const VertexSet& s);

/// S separates G and no proper subset of S does. Decided by the
/// full-component characterisation: every component of G \ S sees all of S.
bool is_minimal_separator(const Graph& g, const VertexSet& s);

/// Same predicate by enumerating all proper subsets. Exponential in |S|.
bool is_minimal_separator_by_subsets(const Graph& g, const VertexSet& s);

/// Whether G \ (removed) is acyclic without materialising the subgraph.
bool is_acyclic_without(const Graph& g, const VertexSet& removed);

/// Throws PreconditionError(kDisconnected) if G is not connected.
void require_connected(const Graph& g, const char* who);

}  // namespace k2free
