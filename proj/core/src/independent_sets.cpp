#include "k2free/independent_sets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "k2free/error.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/recognition.hpp"
#include "k2free/separators.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

struct ByCardinalityDesc {
  bool operator()(const VertexSet& a, const VertexSet& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

/// Every maximal independent set of a small graph by subset scan.
std::vector<VertexSet> small_mis(const Graph& h) {
  const std::size_t n = h.n();
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : h.edges()) {
    adj[u] |= std::uint32_t{1} << v;
    adj[v] |= std::uint32_t{1} << u;
  }
  std::vector<VertexSet> out;
  const std::uint32_t limit = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    std::uint32_t covered = mask;
    bool independent = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1U)) continue;
      if (adj[v] & mask) {
        independent = false;
        break;
      }
      covered |= adj[v];
    }
    if (!independent || covered != limit - 1) continue;
    std::vector<Vertex> ids;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) ids.push_back(static_cast<Vertex>(v));
    }
    out.push_back(VertexSet::from_sorted(std::move(ids)));
  }
  return out;
}

class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, const MisOptions& options) : g_(g), options_(options) {}

  /// Maximal independent sets of the subgraph induced on `part`.
  std::vector<VertexSet> of_part(const VertexSet& part) {
    std::vector<VertexSet> acc{VertexSet{}};
    for (const auto& comp : components_within(g_, part)) {
      const auto& local = of_connected(comp);
      std::vector<VertexSet> next;
      next.reserve(acc.size() * local.size());
      for (const auto& a : acc) {
        for (const auto& b : local) next.push_back(a.set_union(b));
      }
      acc = std::move(next);
    }
    return acc;
  }

  const std::vector<VertexSet>& of_connected(const VertexSet& part) {
    if (auto it = memo_.find(part); it != memo_.end()) return it->second;
    std::vector<VertexSet> result = solve_connected(part);
    return memo_.emplace(part, std::move(result)).first->second;
  }

 private:
  std::vector<VertexSet> solve_connected(const VertexSet& part) {
    if (part.size() == 1) return {part};
    const Subgraph sub = g_.induced(part);
    const Graph& h = sub.graph;
    std::vector<VertexSet> out;
    if (h.is_complete()) {
      for (Vertex v : part) out.push_back(VertexSet{v});
      return out;
    }
    if (part.size() <= std::min<std::size_t>(options_.base_size, 20)) {
      for (const auto& s : small_mis(h)) out.push_back(sub.lift(s));
      return out;
    }

    std::vector<VertexSet> separators;
    if (options_.all_separators) {
      MvsOptions mvs_options;
      mvs_options.check_input = false;
      for (auto& rec : enumerate_mvs(h, mvs_options)) separators.push_back(std::move(rec.vertices));
    } else {
      separators.push_back(h.neighborhood(min_degree_vertex(h)));
    }
    std::set<VertexSet> found;
    // Sets meeting a separator come from branching on its members: for s in
    // S, {s} plus any MIS of the part minus N[s] is already maximal.
    Bitset branched(h.n());
    for (const auto& sep : separators) {
      for (Vertex s : sep) {
        if (!options_.branch_on_separator_vertices || branched.test(s)) continue;
        branched.set(s);
        std::vector<Vertex> rest;
        for (Vertex w = 0; w < h.n(); ++w) {
          if (w != s && !h.has_edge(s, w)) rest.push_back(w);
        }
        const VertexSet pick = sub.lift(VertexSet{s});
        if (rest.empty()) {
          found.insert(pick);
          continue;
        }
        for (const auto& j : of_part(sub.lift(VertexSet::from_sorted(std::move(rest))))) {
          found.insert(pick.set_union(j));
        }
      }
      const ComponentSplit split = components_after_removal(h, sep);
      std::vector<Vertex> trivial;
      for (const auto& comp : split.components) {
        if (comp.size() == 1) trivial.push_back(comp.front());
      }
      const VertexSet base = sub.lift(VertexSet::from_unsorted(std::move(trivial)));
      if (!split.nontrivial_indices.empty()) {
        const VertexSet g1 = sub.lift(split.components[split.nontrivial_indices.front()]);
        for (const auto& j : of_connected(g1)) found.insert(extend(base.set_union(j), part));
      } else {
        found.insert(extend(base, part));
        for (const auto& j : of_part(sub.lift(sep))) found.insert(extend(j, part));
      }
    }
    return {found.begin(), found.end()};
  }

  /// Adds vertices of `within` in ascending order while independence holds.
  VertexSet extend(const VertexSet& s, const VertexSet& within) const {
    Bitset blocked(g_.n());
    for (Vertex v : s) {
      blocked |= g_.row(v);
      blocked.set(v);
    }
    std::vector<Vertex> out = s.vector();
    bool grew = false;
    for (Vertex v : within) {
      if (blocked.test(v)) continue;
      out.push_back(v);
      blocked |= g_.row(v);
      blocked.set(v);
      grew = true;
    }
    if (!grew) return s;
    return VertexSet::from_unsorted(std::move(out));
  }

  const Graph& g_;
  MisOptions options_;
  std::map<VertexSet, std::vector<VertexSet>> memo_;
};

void require_input(const Graph& g, const char* who) {
  require_connected(g, who);
  require_2k2_free(g);
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
  const Bitset mask = g.mask_of(s);
  return std::none_of(s.begin(), s.end(), [&](Vertex v) { return g.row(v).intersects(mask); });
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  Bitset covered = g.mask_of(s);
  for (Vertex v : s) covered |= g.row(v);
  return covered.count() == g.n();
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  const Bitset mask = g.mask_of(s);
  for (const auto& [u, v] : g.edges()) {
    if (!mask.test(u) && !mask.test(v)) return false;
  }
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors) {
  if (colors.size() != g.n()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

MISCollection enumerate_mis(const Graph& g, const MisOptions& options) {
  require_connected(g, "enumerate_mis");
  if (options.check_input) require_2k2_free(g);
  MisEnumerator enumerator(g, options);
  std::vector<VertexSet> sets = enumerator.of_connected(VertexSet::range(g.n()));
  std::sort(sets.begin(), sets.end(), ByCardinalityDesc{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (const auto& s : sets) {
    if (!is_maximal_independent(g, s)) {
      throw FindingError("enumerated set " + s.to_string() + " is not a maximal independent set", serialize_edge_list(g));
    }
  }
  return MISCollection{std::move(sets), graph_signature(g)};
}

VertexSet max_independent_set(const Graph& g) { return enumerate_mis(g).sets.front(); }

VertexSet min_vertex_cover(const Graph& g) {
  VertexSet cover = VertexSet::range(g.n()).set_difference(max_independent_set(g));
  if (!is_vertex_cover(g, cover)) throw FindingError("complement of an MIS misses an edge", serialize_edge_list(g));
  return cover;
}

std::vector<VertexSet> enumerate_minimal_vertex_covers(const Graph& g) {
  const VertexSet all = VertexSet::range(g.n());
  std::vector<VertexSet> out;
  for (const auto& s : enumerate_mis(g).sets) {
    VertexSet cover = all.set_difference(s);
    if (!is_vertex_cover(g, cover)) throw FindingError("complement of an MIS misses an edge", serialize_edge_list(g));
    out.push_back(std::move(cover));
  }
  return out;
}

const char* to_string(ChromaticVerdict v) {
  switch (v) {
    case ChromaticVerdict::kOneColorable: return "1-colorable";
    case ChromaticVerdict::kTwoColorable: return "2-colorable";
    case ChromaticVerdict::kThreeColorable: return "3-colorable";
    case ChromaticVerdict::kNotThreeColorable: return "not-3-colorable";
  }
  return "?";
}

ColorResult three_color(const Graph& g) {
  require_input(g, "three_color");
  ColorResult result;
  if (g.m() == 0) {
    result.verdict = ChromaticVerdict::kOneColorable;
    result.coloring = std::vector<int>(g.n(), 0);
    return result;
  }
  if (auto two = bipartition(g); !two.empty()) {
    result.verdict = ChromaticVerdict::kTwoColorable;
    result.coloring = std::move(two);
    return result;
  }
  MisOptions options;
  options.check_input = false;
  const VertexSet all = VertexSet::range(g.n());
  for (const auto& s : enumerate_mis(g, options).sets) {
    const Subgraph rest = g.induced(all.set_difference(s));
    const auto two = bipartition(rest.graph);
    if (two.empty()) continue;
    std::vector<int> colors(g.n(), 2);
    for (std::size_t i = 0; i < two.size(); ++i) colors[rest.to_parent[i]] = two[i];
    if (!is_proper_coloring(g, colors)) throw FindingError("3-colouring is not proper", serialize_edge_list(g));
    result.verdict = ChromaticVerdict::kThreeColorable;
    result.coloring = std::move(colors);
    result.certificate_mis = s;
    return result;
  }
  result.verdict = ChromaticVerdict::kNotThreeColorable;
  return result;
}

}  // namespace k2free
