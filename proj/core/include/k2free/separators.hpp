#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

struct SeparatorRecord {
  VertexSet vertices;
  std::size_t component_count = 0;
  bool connected = false;
  bool stable = false;
  bool clique = false;
  /// Vertices whose open neighbourhood equals `vertices`, ascending.
  std::vector<Vertex> source_vertices;
};

struct MvsOptions {
  /// Run the 2K2-freeness check on the input first.
  bool check_input = true;
  /// Accept complete graphs and report every N(v) as a "separator" with
  /// component_count 1. Off by default because N(v) does not disconnect K_n.
  bool complete_graph_convention = false;
};

/// All minimal vertex separators of a connected, non-complete 2K2-free graph,
/// sorted by (cardinality, lexicographic). Each candidate N(v) is kept when
/// G \ N(v) has at least two components and every singleton component is
/// adjacent to all of N(v).
std::vector<SeparatorRecord> enumerate_mvs(const Graph& g, const MvsOptions& options = {});

/// Populated record for a given separator. Throws
/// PreconditionError(kNotSeparator) when S does not disconnect G.
SeparatorRecord classify_separator(const Graph& g, const VertexSet& s);

enum class SeparatorMode { kPaper, kExhaustive };

enum class ConnectedProvenance {
  kNone,
  kTwoComponentMvs,   // a_p: first connected member of L1
  kManyComponentMvs,  // b_q: first connected member of L2
  kAugmentedMvs,      // b_1 plus a vertex of one of its singleton components
  kAugmentedAny,      // some MVS plus one vertex of any component
  kSubsetSearch,      // direct search over vertex subsets
};

const char* to_string(ConnectedProvenance p);

struct ConnectedSeparatorAnswer {
  bool exists = false;
  VertexSet vertices;
  std::size_t cardinality = 0;
  ConnectedProvenance provenance = ConnectedProvenance::kNone;
};

struct ConnectedSeparatorOptions {
  SeparatorMode mode = SeparatorMode::kPaper;
  bool check_input = true;
  /// Exhaustive mode searches subsets directly up to this many vertices.
  std::size_t subset_search_limit = 18;
};

ConnectedSeparatorAnswer min_connected_separator(const Graph& g, const ConnectedSeparatorOptions& options = {});

/// Minimum stable (independent) member of enumerate_mvs, if any.
std::optional<SeparatorRecord> min_stable_separator(const Graph& g);

/// Minimum clique member of enumerate_mvs, if any.
std::optional<SeparatorRecord> min_clique_separator(const Graph& g);

}  // namespace k2free
