#include "k2free/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "k2free/error.hpp"

namespace k2free::oracle {
namespace {

using Mask = std::uint32_t;

void check_size(const Graph& g, std::size_t limit, const char* who) {
  if (g.n() > limit) {
    throw PreconditionError(PreconditionError::Kind::kSizeLimit,
                            std::string(who) + " handles at most " + std::to_string(limit) + " vertices");
  }
}

std::vector<Mask> adjacency(const Graph& g) {
  std::vector<Mask> adj(g.n(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

/// Vertices reachable from the lowest vertex of `alive` inside `alive`.
Mask reach(const std::vector<Mask>& adj, Mask alive) {
  if (alive == 0) return 0;
  Mask seen = alive & (~alive + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool disconnected(const std::vector<Mask>& adj, Mask alive) { return alive != 0 && reach(adj, alive) != alive; }

VertexSet to_set(Mask m) {
  std::vector<Vertex> ids;
  for (; m; m &= m - 1) ids.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet::from_sorted(std::move(ids));
}

/// Calls f on each k-subset of {0..n-1} in lexicographic order of the
/// sorted member list until f returns true.
template <typename F>
bool first_combination(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Mask m = 0;
    for (std::size_t i : pick) m |= Mask{1} << i;
    if (f(m)) return true;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool forest(const std::vector<Mask>& adj, Mask alive) {
  // A forest has |E| = |V| - components on the surviving vertices.
  std::size_t edges = 0;
  for (Mask a = alive; a; a &= a - 1) edges += std::popcount(adj[std::countr_zero(a)] & alive);
  edges /= 2;
  std::size_t components = 0;
  for (Mask rest = alive; rest;) {
    rest &= ~reach(adj, rest);
    ++components;
  }
  return edges + components == static_cast<std::size_t>(std::popcount(alive));
}

void sort_sets(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end(), BySizeThenLex{}); }

}  // namespace

std::vector<VertexSet> minimal_separators(const Graph& g) {
  check_size(g, kMaxSeparatorVertices, "oracle minimal_separators");
  const std::size_t n = g.n();
  const auto adj = adjacency(g);
  const Mask full = (Mask{1} << n) - 1;
  // sub_sep[m]: some proper subset of m disconnects G. Numeric order visits
  // every subset before its supersets.
  std::vector<std::uint8_t> sep(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> sub_sep(std::size_t{1} << n, 0);
  std::vector<VertexSet> out;
  for (Mask m = 0; m < full; ++m) {
    sep[m] = disconnected(adj, full & ~m);
    std::uint8_t below = 0;
    for (Mask b = m; b && !below; b &= b - 1) {
      const Mask smaller = m & ~(b & (~b + 1));
      below = sep[smaller] | sub_sep[smaller];
    }
    sub_sep[m] = below;
    if (sep[m] && !below) out.push_back(to_set(m));
  }
  sort_sets(out);
  return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
  check_size(g, kMaxMisVertices, "oracle maximal_independent_sets");
  const std::size_t n = g.n();
  const auto adj = adjacency(g);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<VertexSet> out;
  for (Mask m = 0; m <= full; ++m) {
    bool independent = true;
    Mask dominated = m;
    for (Mask a = m; a; a &= a - 1) {
      const Mask row = adj[std::countr_zero(a)];
      if (row & m) {
        independent = false;
        break;
      }
      dominated |= row;
    }
    if (independent && dominated == full) out.push_back(to_set(m));
    if (m == full) break;
  }
  sort_sets(out);
  return out;
}

VertexSet min_fvs(const Graph& g) {
  check_size(g, kMaxFvsVertices, "oracle min_fvs");
  const std::size_t n = g.n();
  const auto adj = adjacency(g);
  const Mask full = (Mask{1} << n) - 1;
  Mask found = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (first_combination(n, k, [&](Mask m) {
          if (!forest(adj, full & ~m)) return false;
          found = m;
          return true;
        })) {
      break;
    }
  }
  return to_set(found);
}

std::optional<VertexSet> min_connected_separator(const Graph& g) {
  check_size(g, kMaxSeparatorVertices, "oracle min_connected_separator");
  const std::size_t n = g.n();
  const auto adj = adjacency(g);
  const Mask full = (Mask{1} << n) - 1;
  std::optional<VertexSet> found;
  for (std::size_t k = 1; k + 2 <= n && !found; ++k) {
    first_combination(n, k, [&](Mask m) {
      if (reach(adj, m) != m || !disconnected(adj, full & ~m)) return false;
      found = to_set(m);
      return true;
    });
  }
  return found;
}

std::optional<std::vector<int>> three_coloring(const Graph& g) {
  check_size(g, kMaxColorVertices, "oracle three_coloring");
  const std::size_t n = g.n();
  std::vector<int> colour(n, 0);
  // Odometer over {0,1,2}^n with vertex 0 as the most significant digit.
  while (true) {
    bool proper = true;
    for (const auto& [u, v] : g.edges()) {
      if (colour[u] == colour[v]) {
        proper = false;
        break;
      }
    }
    if (proper) return colour;
    std::size_t i = n;
    while (i > 0 && colour[i - 1] == 2) colour[--i] = 0;
    if (i == 0) return std::nullopt;
    ++colour[i - 1];
  }
}

}  // namespace k2free::oracle
