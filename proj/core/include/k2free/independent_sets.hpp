#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

struct MISCollection {
  /// Sorted by cardinality descending, then lexicographically.
  std::vector<VertexSet> sets;
  std::string graph_signature;
};

struct MisOptions {
  bool check_input = true;
  /// Connected parts with at most this many vertices are solved by direct
  /// subset scan instead of splitting at separators.
  std::size_t base_size = 6;
  /// Also emit {s} plus each MIS of the part minus N[s] for separator
  /// members s. Without it the recursion misses sets that meet every
  /// separator of a part.
  bool branch_on_separator_vertices = true;
  /// Split each part at every minimal separator rather than only at the
  /// neighbourhood of a minimum-degree vertex. Same output, much slower.
  bool all_separators = false;
};

/// All maximal independent sets of a connected 2K2-free graph, built by
/// recursing through its minimal separators.
MISCollection enumerate_mis(const Graph& g, const MisOptions& options = {});

VertexSet max_independent_set(const Graph& g);

/// V(G) minus the maximum independent set.
VertexSet min_vertex_cover(const Graph& g);

/// Complements of every maximal independent set, in MIS order.
std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g);

enum class ChromaticVerdict { kOneColorable, kTwoColorable, kThreeColorable, kNotThreeColorable };

const char* to_string(ChromaticVerdict v);

struct ColorResult {
  ChromaticVerdict verdict = ChromaticVerdict::kNotThreeColorable;
  /// colour per vertex, values in {0,1,2}
  std::optional<std::vector<int>> coloring;
  std::optional<VertexSet> certificate_mis;
};

/// 3-colourability by looking for a maximal independent set whose removal
/// leaves a bipartite graph.
ColorResult three_color(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);
bool is_maximal_independent(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors);

}  // namespace k2free
