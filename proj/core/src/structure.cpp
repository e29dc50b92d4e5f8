#include "k2free/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "k2free/error.hpp"

namespace k2free {
namespace {

/// Grows the component of `start` inside `remaining`, clearing visited bits.
std::vector<Vertex> take_component(const Graph& g, Bitset& remaining, Vertex start) {
  std::vector<Vertex> comp{start};
  remaining.reset(start);
  auto& rem = remaining.words();
  for (std::size_t head = 0; head < comp.size(); ++head) {
    const auto& row = g.row(comp[head]).words();
    for (std::size_t wi = 0; wi < rem.size(); ++wi) {
      Bitset::Word w = row[wi] & rem[wi];
      if (w == 0) continue;
      rem[wi] &= ~w;
      while (w != 0) {
        comp.push_back(static_cast<Vertex>(wi * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

void check_members(const Graph& g, const VertexSet& s) {
  if (!s.empty() && s.back() >= g.n()) {
    throw DomainError("vertex " + std::to_string(s.back()) + " is not in the graph");
  }
}

}  // namespace

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  check_members(g, within);
  std::vector<VertexSet> out;
  Bitset remaining = g.mask_of(within);
  for (std::size_t v = remaining.find_first(); v < g.n(); v = remaining.find_next(v)) {
    out.push_back(VertexSet::from_sorted(take_component(g, remaining, static_cast<Vertex>(v))));
  }
  return out;
}

ComponentSplit components_after_removal(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.size() == g.n()) {
    throw PreconditionError(PreconditionError::Kind::kEmptyRemainder, "removed set covers every vertex");
  }
  ComponentSplit split;
  split.removed = s;
  Bitset remaining = g.all_vertices();
  for (Vertex v : s) remaining.reset(v);
  for (std::size_t v = remaining.find_first(); v < g.n(); v = remaining.find_next(v)) {
    auto comp = take_component(g, remaining, static_cast<Vertex>(v));
    if (comp.size() == 1) {
      ++split.trivial_count;
    } else {
      split.nontrivial_indices.push_back(split.components.size());
    }
    split.components.push_back(VertexSet::from_sorted(std::move(comp)));
  }
  return split;
}

bool is_universal_vertex(const Graph& g, const VertexSet& s, Vertex v) {
  check_members(g, s);
  if (s.contains(v)) throw DomainError("vertex " + std::to_string(v) + " lies inside S");
  return std::all_of(s.begin(), s.end(), [&](Vertex x) { return g.has_edge(x, v); });
}

bool is_universal_edge(const Graph& g, const VertexSet& s, Vertex u, Vertex v) {
  check_members(g, s);
  if (u >= g.n() || v >= g.n() || u == v || !g.has_edge(u, v)) {
    throw DomainError("{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
  }
  if (s.contains(u) || s.contains(v)) throw DomainError("edge endpoint lies inside S");
  return std::all_of(s.begin(), s.end(), [&](Vertex x) { return g.has_edge(x, u) || g.has_edge(x, v); });
}

SubsetClass classify_subset(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.empty()) throw DomainError("classify_subset needs a non-empty set");
  SubsetClass out;
  const Bitset mask = g.mask_of(s);
  std::size_t degree_sum = 0;
  for (Vertex v : s) {
    Bitset inside = g.row(v);
    inside &= mask;
    degree_sum += inside.count();
  }
  out.independent = degree_sum == 0;
  out.clique = degree_sum == s.size() * (s.size() - 1);
  Bitset remaining = mask;
  out.connected = take_component(g, remaining, s.front()).size() == s.size();
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  Bitset remaining = g.all_vertices();
  return take_component(g, remaining, 0).size() == g.n();
}

bool is_acyclic(const Graph& g) { return is_acyclic_without(g, {}); }

bool is_acyclic_without(const Graph& g, const VertexSet& removed) {
  std::vector<char> gone(g.n(), 0);
  for (Vertex v : removed) gone[v] = 1;
  DisjointSets sets(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    if (gone[u]) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v <= u || gone[v]) continue;
      if (!sets.unite(u, v)) return false;
    }
  }
  return true;
}

std::vector<int> bipartition(const Graph& g) {
  std::vector<int> colour(g.n(), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop();
      for (Vertex w : g.neighbors(v)) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          queue.push(w);
        } else if (colour[w] == colour[v]) {
          return {};
        }
      }
    }
  }
  return colour;
}

GraphPredicates graph_predicates(const Graph& g) {
  GraphPredicates p;
  p.connected = is_connected(g);
  p.bipartite = g.n() == 0 || !bipartition(g).empty();
  p.acyclic = is_acyclic(g);
  return p;
}

bool is_separator(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.size() >= g.n()) return false;
  Bitset remaining = g.all_vertices();
  for (Vertex v : s) remaining.reset(v);
  const auto first = static_cast<Vertex>(remaining.find_first());
  const std::size_t reached = take_component(g, remaining, first).size();
  return reached < g.n() - s.size();
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  check_members(g, s);
  if (s.size() >= g.n()) return false;
  const auto split = components_after_removal(g, s);
  if (split.count() < 2) return false;
  const Bitset s_mask = g.mask_of(s);
  for (const auto& comp : split.components) {
    Bitset seen(g.n());
    for (Vertex v : comp) seen |= g.row(v);
    seen &= s_mask;
    if (seen.count() != s.size()) return false;
  }
  return true;
}

bool is_minimal_separator_by_subsets(const Graph& g, const VertexSet& s) {
  if (s.size() > 24) throw DomainError("subset check limited to |S| <= 24");
  if (!is_separator(g, s)) return false;
  const std::uint32_t full = (std::uint32_t{1} << s.size()) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) sub.push_back(s[i]);
    }
    if (is_separator(g, VertexSet::from_sorted(std::move(sub)))) return false;
  }
  return true;
}

void require_connected(const Graph& g, const char* who) {
  if (g.n() == 0 || !is_connected(g)) {
    throw PreconditionError(PreconditionError::Kind::kDisconnected, std::string(who) + " requires a connected graph");
  }
}

}  // namespace k2free
