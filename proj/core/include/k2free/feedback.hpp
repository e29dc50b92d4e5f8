#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

enum class SubclassTag { kC3C4Free, kC3C5Free, kTwoK2FreeOnly, kNotTwoK2Free };

/// "2K2-C3-C4-free", "2K2-C3-C5-free", "2K2-free-only", "not-2K2-free".
const char* to_string(SubclassTag tag);

/// Requires a connected graph. A 2K2-free graph without induced C3, C4 and C5
/// is acyclic and gets the C3C4 tag.
SubclassTag classify_subclass(const Graph& g);

/// Connected, bipartite and 2K2-free, checked in O(n + m) via nested
/// neighbourhoods on one side.
bool is_c3c5_free_member(const Graph& g);

enum class FvsCase { kAcyclic, kC5Graph, kCaseI, kCaseII, kCaseIII };

/// "acyclic", "c5-graph", "thm5-i", "thm5-ii", "thm5-iii".
const char* to_string(FvsCase c);

struct FvsResult {
  std::size_t cardinality = 0;
  VertexSet vertices;
  FvsCase case_tag = FvsCase::kAcyclic;
  /// Minimum-degree separator, union of its singleton components, and the
  /// vertices of the non-trivial component adjacent to all of S.
  std::optional<VertexSet> s;
  std::optional<VertexSet> t;
  std::optional<VertexSet> u;
};

/// Minimum feedback vertex set of a connected (2K2,C3,C4)-free graph. Such
/// graphs are trees or the 5-cycle.
FvsResult fvs_c3c4(const Graph& g);

/// Minimum feedback vertex set of a connected (2K2,C3,C5)-free graph by the
/// closed forms over the minimum-degree separator.
FvsResult fvs_c3c5(const Graph& g);

/// The same closed forms evaluated over a caller-chosen minimal separator.
FvsResult fvs_c3c5(const Graph& g, const VertexSet& separator);

/// Names of the structural properties that fail for minimal separator S of a
/// (2K2,C3,C5)-free graph. Empty when all hold:
///   "s-independent"       S induces no edge
///   "one-component"       G \ S has at most one non-trivial component
///   "neighbourhood-stable" N(x) inside G_1 is independent for x in S
///   "edge-split"          each G_1 edge joins a vertex adjacent to all of S
///                         and a vertex with no neighbour in S
std::vector<std::string> c3c5_structure_violations(const Graph& g, const VertexSet& s);

/// Same for (2K2,C3,C4)-free graphs:
///   "s-independent", "one-component"
///   "one-trivial"         |S| > 1 implies exactly one singleton component
///   "edge-partition"      each G_1 edge splits S into two disjoint halves
///   "at-most-one-s-neighbour"  G_1 vertices see at most one S vertex
///   "exactly-one-s-neighbour"  G_1 vertices see exactly one S vertex
std::vector<std::string> c3c4_structure_violations(const Graph& g, const VertexSet& s);

}  // namespace k2free
