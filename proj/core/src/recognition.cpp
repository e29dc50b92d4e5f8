#include "k2free/recognition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <queue>

#include "k2free/error.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

TwoK2Witness make_witness(Vertex a, Vertex b, Vertex c, Vertex d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (c < a) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return {a, b, c, d};
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.n(), kUnreached);
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

/// Shortest source→target path; each step back takes the smallest-id
/// predecessor.
std::vector<Vertex> shortest_path(const Graph& g, Vertex source, Vertex target) {
  const auto dist = bfs_distances(g, source);
  std::vector<Vertex> path{target};
  Vertex at = target;
  while (at != source) {
    for (Vertex w : g.neighbors(at)) {
      if (dist[w] + 1 == dist[at]) {
        at = w;
        break;
      }
    }
    path.push_back(at);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ForbiddenWitness canonical_order(ForbiddenWitness w) {
  auto& v = w.vertices;
  switch (w.kind) {
    case ForbiddenKind::kH1: {
      auto rev = v;
      std::reverse(rev.begin(), rev.end());
      v = std::min(v, rev);
      break;
    }
    case ForbiddenKind::kH2:
      if (v[0] > v[1]) std::swap(v[0], v[1]);
      break;
    case ForbiddenKind::kH3: {
      if (v[0] > v[1]) std::swap(v[0], v[1]);
      if (v[3] > v[4]) std::swap(v[3], v[4]);
      const std::array<Vertex, 5> flipped{v[3], v[4], v[2], v[0], v[1]};
      v = std::min(v, flipped);
      break;
    }
  }
  return w;
}

std::size_t count_and(const Bitset& a, const Bitset& b) {
  std::size_t c = 0;
  const auto& x = a.words();
  const auto& y = b.words();
  for (std::size_t i = 0; i < x.size(); ++i) c += static_cast<std::size_t>(std::popcount(x[i] & y[i]));
  return c;
}

/// Least member of S adjacent to neither endpoint, or S.size() if none.
std::size_t first_common_miss(const Bitset& s, const Bitset& rx, const Bitset& ry) {
  const auto& a = s.words();
  const auto& b = rx.words();
  const auto& c = ry.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Bitset::Word w = a[i] & ~b[i] & ~c[i];
    if (w != 0) return i * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(w));
  }
  return s.size();
}

VertexSet to_set(const Bitset& mask) {
  std::vector<Vertex> out;
  mask.for_each([&](Vertex v) { out.push_back(v); });
  return VertexSet::from_sorted(std::move(out));
}

/// Components of the subgraph induced on `mask`, ordered by smallest member.
std::vector<Bitset> components_of(const Graph& g, const Bitset& mask) {
  std::vector<Bitset> out;
  Bitset remaining = mask;
  for (std::size_t start = remaining.find_first(); start < g.n(); start = remaining.find_first()) {
    Bitset comp(g.n());
    Bitset frontier(g.n());
    frontier.set(start);
    remaining.reset(start);
    Bitset next(g.n());
    while (frontier.any()) {
      comp |= frontier;
      next.clear();
      frontier.for_each([&](Vertex v) { next |= g.row(v); });
      next &= remaining;
      remaining.subtract(next);
      std::swap(frontier, next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// Least vertex of a non-trivial component and its least neighbour in it.
Edge edge_in(const Graph& g, const Bitset& comp) {
  const auto a = static_cast<Vertex>(comp.find_first());
  Bitset inside = g.row(a);
  inside &= comp;
  const std::size_t b = inside.find_first();
  if (b >= g.n()) throw FindingError("component without an internal edge", serialize_edge_list(g));
  return {a, static_cast<Vertex>(b)};
}

/// Works on the host graph throughout. The current part is a vertex mask,
/// so each level costs O(n^2 / w) instead of a subgraph rebuild.
class StructuralTester {
 public:
  StructuralTester(const Graph& g, const StructuralOptions& options, bool record)
      : host_(g), options_(options), record_(record) {}

  RecognitionResult run() {
    Bitset part = host_.all_vertices();
    for (depth_ = 0;; ++depth_) {
      auto next = step(part);
      if (!next) break;
      part = std::move(*next);
    }
    return std::move(result_);
  }

 private:
  void note(const Bitset& part, const VertexSet& sep, const char* condition, ConditionVerdict verdict,
            std::string text = {}) {
    if (!record_) return;
    TraceEntry e;
    e.depth = depth_;
    e.part = to_set(part);
    e.separator = sep;
    e.condition = condition;
    e.verdict = verdict;
    e.note = std::move(text);
    result_.trace.push_back(std::move(e));
  }

  void reject(const TwoK2Witness& w) {
    if (!validate_witness(host_, w)) {
      throw FindingError("structural tester produced an invalid witness", serialize_edge_list(host_));
    }
    result_.is_2k2_free = false;
    result_.witness = w;
  }

  std::size_t degree(Vertex v, const Bitset& part) const { return count_and(host_.row(v), part); }

  /// Decides one part. Returns the vertex mask to recurse on, or nothing
  /// when the verdict is final.
  std::optional<Bitset> step(const Bitset& part) {
    const Graph& g = host_;
    const std::size_t size = part.count();
    if (size <= options_.base_size) {
      const Subgraph sub = g.induced(to_set(part));
      const auto w = find_2k2_pair(sub.graph);
      note(part, {}, "base", w ? ConditionVerdict::kViolated : ConditionVerdict::kHolds, "pairwise check");
      if (w) reject(make_witness(sub.to_parent[w->a], sub.to_parent[w->b], sub.to_parent[w->c], sub.to_parent[w->d]));
      return std::nullopt;
    }

    Vertex u = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    part.for_each([&](Vertex v) {
      const std::size_t d = degree(v, part);
      if (d < best) {
        best = d;
        u = v;
      }
    });
    if (best == size - 1) {
      note(part, {}, "base", ConditionVerdict::kHolds, "complete graph");
      return std::nullopt;
    }

    Bitset sep_mask = g.row(u);
    sep_mask &= part;
    const VertexSet sep = to_set(sep_mask);
    Bitset outside = part;
    outside.subtract(sep_mask);
    const auto comps = components_of(g, outside);
    std::vector<const Bitset*> nontrivial;
    for (const auto& c : comps) {
      if (c.count() > 1) nontrivial.push_back(&c);
    }

    // (i) at most one non-trivial component in G \ S.
    if (nontrivial.size() > 1) {
      const auto e = edge_in(g, *nontrivial[0]);
      const auto f = edge_in(g, *nontrivial[1]);
      note(part, sep, "i", ConditionVerdict::kViolated, "two non-trivial components");
      reject(make_witness(e.first, e.second, f.first, f.second));
      return std::nullopt;
    }
    note(part, sep, "i", ConditionVerdict::kHolds);

    // (ii) trivial components are universal to S. A trivial component t has
    // N(t) within S and degree at least |S|, so this only fails if the
    // minimum-degree choice is broken.
    for (const auto& c : comps) {
      if (c.count() != 1) continue;
      if (degree(static_cast<Vertex>(c.find_first()), part) != sep.size()) {
        note(part, sep, "ii", ConditionVerdict::kViolated, "trivial component not universal");
        const Subgraph sub = g.induced(to_set(part));
        const auto w = find_2k2_pair(sub.graph);
        if (!w) throw FindingError("non-universal trivial component in a 2K2-free part", serialize_edge_list(sub.graph));
        reject(make_witness(sub.to_parent[w->a], sub.to_parent[w->b], sub.to_parent[w->c], sub.to_parent[w->d]));
        return std::nullopt;
      }
    }
    note(part, sep, "ii", ConditionVerdict::kHolds);

    const bool has_component = !nontrivial.empty();
    const Bitset component_mask = has_component ? *nontrivial.front() : Bitset(g.n());

    // (iii) every edge of the non-trivial component is universal to S. Only
    // edges between two vertices that each miss part of S can fail; the
    // least failing s is then rescanned for the least edge.
    if (has_component) {
      Bitset non_universal(g.n());
      component_mask.for_each([&](Vertex x) {
        if (!sep_mask.is_subset_of(g.row(x))) non_universal.set(x);
      });
      std::size_t first_s = g.n();
      Bitset nb(g.n());
      non_universal.for_each([&](Vertex x) {
        nb = g.row(x);
        nb &= non_universal;
        nb.for_each([&](Vertex y) {
          if (y > x) first_s = std::min(first_s, first_common_miss(sep_mask, g.row(x), g.row(y)));
        });
      });
      if (first_s < g.n()) {
        const auto s = static_cast<Vertex>(first_s);
        Bitset missed = component_mask;
        missed.subtract(g.row(s));
        for (std::size_t x = missed.find_first(); x < g.n(); x = missed.find_next(x + 1)) {
          nb = g.row(static_cast<Vertex>(x));
          nb &= missed;
          const std::size_t y = nb.find_first();
          if (y < g.n()) {
            note(part, sep, "iii", ConditionVerdict::kViolated,
                 "edge {" + std::to_string(x) + "," + std::to_string(y) + "} misses " + std::to_string(s));
            reject(make_witness(u, s, static_cast<Vertex>(x), static_cast<Vertex>(y)));
            return std::nullopt;
          }
        }
        throw FindingError("condition (iii) rescan found no edge", serialize_edge_list(g));
      }
      note(part, sep, "iii", ConditionVerdict::kHolds);
    }

    // (iv) [S] has at most one non-trivial component.
    const auto sep_parts = components_of(g, sep_mask);
    std::vector<const Bitset*> sep_nontrivial;
    for (const auto& c : sep_parts) {
      if (c.count() > 1) sep_nontrivial.push_back(&c);
    }
    if (sep_nontrivial.size() > 1) {
      const auto e = edge_in(g, *sep_nontrivial[0]);
      const auto f = edge_in(g, *sep_nontrivial[1]);
      note(part, sep, "iv", ConditionVerdict::kViolated, "two non-trivial components inside S");
      reject(make_witness(e.first, e.second, f.first, f.second));
      return std::nullopt;
    }
    note(part, sep, "iv", ConditionVerdict::kHolds);

    // (v) edges of S's non-trivial component are universal to M.
    if (has_component && !sep_nontrivial.empty()) {
      const Bitset& inner = *sep_nontrivial.front();
      // Only edges {a,b} with some y in S adjacent to neither end can give a
      // witness; collect them per y and test in lexicographic order.
      std::vector<Edge> candidates;
      Bitset z(g.n());
      Bitset nb(g.n());
      sep_mask.for_each([&](Vertex y) {
        z = inner;
        z.subtract(g.row(y));
        z.reset(y);
        z.for_each([&](Vertex a) {
          nb = g.row(a);
          nb &= z;
          nb.for_each([&](Vertex b) {
            if (b > a) candidates.emplace_back(a, b);
          });
        });
      });
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      std::optional<TwoK2Witness> found;
      std::string found_note;
      Bitset rest(g.n());
      Bitset m(g.n());
      for (const auto& [a, b] : candidates) {
        rest = sep_mask;
        rest.subtract(g.row(a));
        rest.subtract(g.row(b));
        m = component_mask;
        rest.for_each([&](Vertex y) { m &= g.row(y); });
        m.subtract(g.row(a));
        m.subtract(g.row(b));
        const std::size_t x = m.find_first();
        if (x >= g.n()) continue;
        found = make_witness(a, b, static_cast<Vertex>(x), static_cast<Vertex>(rest.find_first()));
        found_note = "edge {" + std::to_string(a) + "," + std::to_string(b) + "} not universal to M";
        break;
      }
      // With S \ (N(a) u N(b)) empty, M is the whole component and a failure
      // yields no 2K2. Only the trace reports it.
      bool uncertified = false;
      if (!found && record_) {
        Bitset w(g.n());
        component_mask.for_each([&](Vertex x) {
          if (uncertified) return;
          w = inner;
          w.subtract(g.row(x));
          w.for_each([&](Vertex a) {
            if (uncertified) return;
            nb = g.row(a);
            nb &= w;
            nb.for_each([&](Vertex b) {
              if (uncertified || b <= a) return;
              rest = sep_mask;
              rest.subtract(g.row(a));
              rest.subtract(g.row(b));
              if (rest.none()) uncertified = true;
            });
          });
        });
      }
      if (found) {
        note(part, sep, "v", ConditionVerdict::kViolated, found_note);
        reject(*found);
        return std::nullopt;
      }
      note(part, sep, "v", uncertified ? ConditionVerdict::kUncertified : ConditionVerdict::kHolds,
           uncertified ? "violated with empty S \\ (N(a) u N(b)); no witness, continuing" : "");
    }

    if (has_component) {
      if (options_.target == RecursionTarget::kClosedNeighbourhood) {
        Bitset next = sep_mask;
        next.set(u);
        return next;
      }
      if (options_.target == RecursionTarget::kComponentOnly) return component_mask;
      Bitset next = component_mask;
      next |= sep_mask;
      return next;
    }
    if (!sep_nontrivial.empty()) return *sep_nontrivial.front();
    return std::nullopt;
  }

  const Graph& host_;
  StructuralOptions options_;
  bool record_;
  int depth_ = 0;
  RecognitionResult result_;
};

}  // namespace

std::optional<TwoK2Witness> find_2k2_pair(const Graph& g) {
  const std::size_t n = g.n();
  for (Vertex w = 0; w < n; ++w) {
    for (Vertex x = w + 1; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const bool wx = g.has_edge(w, x);
        const bool wy = g.has_edge(w, y);
        const bool xy = g.has_edge(x, y);
        if (int(wx) + int(wy) + int(xy) != 1) continue;
        // The triple holds one edge {p,q} and an isolated vertex o; the
        // fourth vertex must see o and neither of p, q.
        Vertex p = w, q = x, o = y;
        if (wy) {
          q = y;
          o = x;
        } else if (xy) {
          p = x;
          q = y;
          o = w;
        }
        Bitset cand = g.row(o);
        cand.subtract(g.row(p));
        cand.subtract(g.row(q));
        const std::size_t z = cand.find_next(y + 1);
        if (z < n) return make_witness(p, q, o, static_cast<Vertex>(z));
      }
    }
  }
  return std::nullopt;
}

bool validate_witness(const Graph& g, const TwoK2Witness& w) {
  const auto s = w.sorted();
  if (s.back() >= g.n()) return false;
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  if (!g.has_edge(w.a, w.b) || !g.has_edge(w.c, w.d)) return false;
  return !g.has_edge(w.a, w.c) && !g.has_edge(w.a, w.d) && !g.has_edge(w.b, w.c) && !g.has_edge(w.b, w.d);
}

const char* to_string(ForbiddenKind kind) {
  switch (kind) {
    case ForbiddenKind::kH1: return "H1";
    case ForbiddenKind::kH2: return "H2";
    case ForbiddenKind::kH3: return "H3";
  }
  return "?";
}

std::vector<std::pair<int, int>> forbidden_shape(ForbiddenKind kind) {
  switch (kind) {
    case ForbiddenKind::kH1: return {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    case ForbiddenKind::kH2: return {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}};
    case ForbiddenKind::kH3: return {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  }
  return {};
}

bool validate_forbidden(const Graph& g, const ForbiddenWitness& w) {
  auto sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= g.n() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  bool want[5][5] = {};
  for (auto [i, j] : forbidden_shape(w.kind)) want[i][j] = want[j][i] = true;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      if (g.has_edge(w.vertices[i], w.vertices[j]) != want[i][j]) return false;
    }
  }
  return true;
}

std::optional<ForbiddenWitness> find_forbidden_subgraph(const Graph& g) {
  require_connected(g, "find_forbidden_subgraph");
  const auto pair = find_2k2_pair(g);
  if (!pair) return std::nullopt;

  // Closest endpoints of the two edges; ties go to the smaller (start, end).
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Vertex start = 0, end = 0, start_mate = 0, end_mate = 0;
  for (auto [s, s_mate] : {std::pair{pair->a, pair->b}, std::pair{pair->b, pair->a}}) {
    const auto dist = bfs_distances(g, s);
    for (auto [t, t_mate] : {std::pair{pair->c, pair->d}, std::pair{pair->d, pair->c}}) {
      const bool better = dist[t] < best || (dist[t] == best && std::pair{s, t} < std::pair{start, end});
      if (better) {
        best = dist[t];
        start = s;
        end = t;
        start_mate = s_mate;
        end_mate = t_mate;
      }
    }
  }
  const auto p = shortest_path(g, start, end);
  const Vertex q = start_mate;
  const Vertex r = end_mate;
  const std::size_t k = p.size() - 1;  // >= 2, the edges are not adjacent

  ForbiddenWitness w;
  if (k >= 4) {
    w = {ForbiddenKind::kH1, {p[0], p[1], p[2], p[3], p[4]}};
  } else if (k == 3) {
    const bool q_in = g.has_edge(q, p[1]);
    const bool r_in = g.has_edge(r, p[2]);
    if (!q_in) {
      w = {ForbiddenKind::kH1, {q, p[0], p[1], p[2], p[3]}};
    } else if (!r_in) {
      w = {ForbiddenKind::kH1, {p[0], p[1], p[2], p[3], r}};
    } else {
      w = {ForbiddenKind::kH2, {q, p[0], p[1], p[2], p[3]}};
    }
  } else {
    const bool q_in = g.has_edge(q, p[1]);
    const bool r_in = g.has_edge(r, p[1]);
    if (q_in && r_in) {
      w = {ForbiddenKind::kH3, {q, p[0], p[1], p[2], r}};
    } else if (q_in) {
      w = {ForbiddenKind::kH2, {q, p[0], p[1], p[2], r}};
    } else if (r_in) {
      w = {ForbiddenKind::kH2, {r, p[2], p[1], p[0], q}};
    } else {
      w = {ForbiddenKind::kH1, {q, p[0], p[1], p[2], r}};
    }
  }
  w = canonical_order(w);
  if (!validate_forbidden(g, w)) {
    throw FindingError("forbidden-subgraph replay produced an invalid witness", serialize_edge_list(g));
  }
  return w;
}

const char* to_string(ConditionVerdict v) {
  switch (v) {
    case ConditionVerdict::kHolds: return "holds";
    case ConditionVerdict::kViolated: return "violated";
    case ConditionVerdict::kUncertified: return "uncertified";
  }
  return "?";
}

RecognitionResult test_2k2_structural(const Graph& g, const StructuralOptions& options) {
  require_connected(g, "test_2k2_structural");
  return StructuralTester(g, options, true).run();
}

void require_2k2_free(const Graph& g) {
  const auto verdict = StructuralTester(g, {}, false).run();
  if (!verdict.is_2k2_free) throw NotTwoK2FreeError(*verdict.witness);
}

Vertex min_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.n(); ++v) {
    if (g.degree(v) < g.degree(best)) best = v;
  }
  return best;
}

VertexSet min_degree_separator(const Graph& g, const MinDegreeOptions& options) {
  require_connected(g, "min_degree_separator");
  if (g.is_complete()) {
    throw PreconditionError(PreconditionError::Kind::kCompleteGraph, "a complete graph has no vertex separator");
  }
  if (options.check_input) require_2k2_free(g);
  const Vertex u = min_degree_vertex(g);
  VertexSet sep = g.neighborhood(u);
  bool minimal = is_minimal_separator(g, sep);
  if (minimal && g.n() <= 18) minimal = is_minimal_separator_by_subsets(g, sep);
  if (!minimal) {
    throw FindingError("neighbourhood of a minimum-degree vertex is not a minimal separator",
                       serialize_edge_list(g));
  }
  return sep;
}

SmallCycles detect_small_cycles(const Graph& g) {
  SmallCycles out;
  const std::size_t n = g.n();
  for (Vertex u = 0; u < n && !out.has_induced_c3; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v > u && g.row(u).intersects(g.row(v))) {
        out.has_induced_c3 = true;
        break;
      }
    }
  }
  // C4 a-b-c-d: a, c non-adjacent with two non-adjacent common neighbours.
  for (Vertex a = 0; a < n && !out.has_induced_c4; ++a) {
    for (Vertex c = a + 1; c < n && !out.has_induced_c4; ++c) {
      if (g.has_edge(a, c)) continue;
      Bitset common = g.row(a);
      common &= g.row(c);
      common.for_each([&](Vertex b) {
        if (out.has_induced_c4) return;
        Bitset rest = common;
        rest.subtract(g.row(b));
        rest.reset(b);
        if (rest.any()) out.has_induced_c4 = true;
      });
    }
  }
  // C5 a-b-c-d-e: b, e non-adjacent neighbours of a; c sees b only; d sees c
  // and e only.
  for (Vertex a = 0; a < n && !out.has_induced_c5; ++a) {
    const auto nbrs = g.neighbors(a);
    for (std::size_t i = 0; i < nbrs.size() && !out.has_induced_c5; ++i) {
      for (std::size_t j = i + 1; j < nbrs.size() && !out.has_induced_c5; ++j) {
        const Vertex b = nbrs[i];
        const Vertex e = nbrs[j];
        if (g.has_edge(b, e)) continue;
        Bitset cs = g.row(b);
        cs.subtract(g.row(a));
        cs.subtract(g.row(e));
        cs.reset(a);
        cs.for_each([&](Vertex c) {
          if (out.has_induced_c5) return;
          Bitset ds = g.row(c);
          ds &= g.row(e);
          ds.subtract(g.row(a));
          ds.subtract(g.row(b));
          if (ds.any()) out.has_induced_c5 = true;
        });
      }
    }
  }
  return out;
}

}  // namespace k2free
