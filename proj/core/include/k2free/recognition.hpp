#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

/// Lexicographically least induced 2K2 (by sorted 4-tuple), or nothing.
/// O(n^4) in the worst case; no connectivity requirement.
std::optional<TwoK2Witness> find_2k2_pair(const Graph& g);

inline bool is_2k2_free(const Graph& g) { return !find_2k2_pair(g).has_value(); }

/// Checks the witness invariant: two edges, four distinct vertices, no
/// cross adjacency.
bool validate_witness(const Graph& g, const TwoK2Witness& w);

enum class ForbiddenKind { kH1, kH2, kH3 };

const char* to_string(ForbiddenKind kind);

/// One of the three connected 5-vertex graphs whose end edges form a 2K2.
///
/// Vertex order:
///   H1  path v0-v1-v2-v3-v4
///   H2  triangle v0,v1,v2 with pendant path v2-v3-v4
///   H3  triangles v0,v1,v2 and v2,v3,v4 (bowtie)
struct ForbiddenWitness {
  ForbiddenKind kind = ForbiddenKind::kH1;
  std::array<Vertex, 5> vertices{};

  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// Edge list (as index pairs into `vertices`) that `kind` must induce.
std::vector<std::pair<int, int>> forbidden_shape(ForbiddenKind kind);

/// The five vertices induce exactly the edges of the declared shape.
bool validate_forbidden(const Graph& g, const ForbiddenWitness& w);

/// Finds an induced H1, H2 or H3 in a connected graph, or nothing when the
/// graph is 2K2-free. Starts from the least 2K2 and walks a shortest path
/// between its two edges. Throws PreconditionError for disconnected input.
std::optional<ForbiddenWitness> find_forbidden_subgraph(const Graph& g);

enum class ConditionVerdict { kHolds, kViolated, kUncertified };

const char* to_string(ConditionVerdict v);

/// One evaluated condition of the separator characterisation. `condition`
/// is "i".."v", or "base" when a part was decided directly.
struct TraceEntry {
  int depth = 0;
  VertexSet part;       // vertices of the graph being tested, host ids
  VertexSet separator;  // host ids; empty for base decisions
  std::string condition;
  ConditionVerdict verdict = ConditionVerdict::kHolds;
  std::string note;
};

struct RecognitionResult {
  bool is_2k2_free = true;
  std::optional<TwoK2Witness> witness;
  std::vector<TraceEntry> trace;
};

/// Where the tester recurses once G \ S has a non-trivial component G_j.
enum class RecursionTarget {
  kComponentWithSeparator,  // G_j together with S
  kClosedNeighbourhood,     // {u} together with S, the literal reading
  kComponentOnly,           // G_j alone, as in the worked example
};

struct StructuralOptions {
  RecursionTarget target = RecursionTarget::kComponentWithSeparator;
  /// Parts with at most this many vertices go to find_2k2_pair.
  std::size_t base_size = 4;
};

/// Recognition by repeated splitting at the neighbourhood of a minimum
/// degree vertex. Every negative answer carries a validated witness.
RecognitionResult test_2k2_structural(const Graph& g, const StructuralOptions& options = {});

/// Throws NotTwoK2FreeError carrying a witness when G contains an induced
/// 2K2. Uses the structural tester without recording a trace.
void require_2k2_free(const Graph& g);

struct MinDegreeOptions {
  bool check_input = true;
};

/// N(u) for the lowest-id vertex of minimum degree, verified to be a
/// minimal separator. Throws PreconditionError for disconnected or complete
/// graphs and NotTwoK2FreeError when the hypothesis fails.
VertexSet min_degree_separator(const Graph& g, const MinDegreeOptions& options = {});

/// Lowest-id vertex of minimum degree.
Vertex min_degree_vertex(const Graph& g);

struct SmallCycles {
  bool has_induced_c3 = false;
  bool has_induced_c4 = false;
  bool has_induced_c5 = false;

  friend bool operator==(const SmallCycles&, const SmallCycles&) = default;
};

/// Induced C3/C4/C5 detection by bounded tuple search.
SmallCycles detect_small_cycles(const Graph& g);

}  // namespace k2free
