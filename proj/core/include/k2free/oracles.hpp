#pragma once

#include <optional>
#include <vector>

#include "k2free/graph.hpp"

// Brute-force reference answers. These share nothing with the algorithmic
// modules beyond the graph type and are meant for small inputs only.
namespace k2free::oracle {

inline constexpr std::size_t kMaxSeparatorVertices = 18;
inline constexpr std::size_t kMaxMisVertices = 20;
inline constexpr std::size_t kMaxFvsVertices = 16;
inline constexpr std::size_t kMaxColorVertices = 12;

/// Every inclusion-minimal disconnecting set, sorted by (size, lex).
std::vector<VertexSet> minimal_separators(const Graph& g);

/// Every maximal independent set, sorted by (size, lex).
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Lexicographically least minimum feedback vertex set.
VertexSet min_fvs(const Graph& g);

/// Least (size, lex) connected disconnecting set, if any.
std::optional<VertexSet> min_connected_separator(const Graph& g);

/// First proper colouring with colours {0,1,2} in lexicographic order of
/// the colour vector.
std::optional<std::vector<int>> three_coloring(const Graph& g);

}  // namespace k2free::oracle
