#include "k2free/separators.hpp"

#include <algorithm>
#include <map>

#include "k2free/error.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/recognition.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

using PKind = PreconditionError::Kind;

void fill_flags(const Graph& g, SeparatorRecord& rec) {
  const SubsetClass cls = classify_subset(g, rec.vertices);
  rec.connected = cls.connected;
  rec.stable = cls.independent;
  rec.clique = cls.clique;
}

/// Component count of G \ S, or 0 when some singleton component is not
/// adjacent to all of S.
std::size_t accepted_components(const Graph& g, const VertexSet& s) {
  if (s.size() >= g.n()) return 0;
  const ComponentSplit split = components_after_removal(g, s);
  for (const auto& comp : split.components) {
    if (comp.size() == 1 && g.degree(comp.front()) != s.size()) return 0;
  }
  return split.count();
}

void require_input(const Graph& g, bool check_input, const char* who) {
  require_connected(g, who);
  if (g.is_complete()) {
    throw PreconditionError(PKind::kCompleteGraph, std::string(who) + ": a complete graph has no vertex separator");
  }
  if (check_input) require_2k2_free(g);
}

bool connected_and_separating(const Graph& g, const VertexSet& s) {
  return !s.empty() && classify_subset(g, s).connected && is_separator(g, s);
}

/// Smallest connected separator by direct subset search, least in
/// (cardinality, lexicographic) order.
std::optional<VertexSet> subset_search(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<Vertex> pick;
  std::optional<VertexSet> found;
  for (std::size_t k = 1; k + 1 < n && !found; ++k) {
    pick.resize(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      const auto s = VertexSet::from_sorted(pick);
      if (connected_and_separating(g, s)) {
        found = s;
        break;
      }
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return found;
}

ConnectedSeparatorAnswer answer(VertexSet s, ConnectedProvenance p) {
  ConnectedSeparatorAnswer a;
  a.exists = true;
  a.cardinality = s.size();
  a.vertices = std::move(s);
  a.provenance = p;
  return a;
}

bool better(const ConnectedSeparatorAnswer& a, const ConnectedSeparatorAnswer& b) {
  if (!b.exists) return a.exists;
  if (!a.exists) return false;
  return BySizeThenLex{}(a.vertices, b.vertices);
}

ConnectedSeparatorAnswer paper_answer(const Graph& g, const std::vector<SeparatorRecord>& mvs) {
  std::vector<const SeparatorRecord*> l1;
  std::vector<const SeparatorRecord*> l2;
  for (const auto& r : mvs) (r.component_count == 2 ? l1 : l2).push_back(&r);

  auto first_connected = [](const std::vector<const SeparatorRecord*>& list) -> const SeparatorRecord* {
    for (const auto* r : list) {
      if (r->connected) return r;
    }
    return nullptr;
  };
  const SeparatorRecord* a_p = first_connected(l1);
  const SeparatorRecord* b_q = first_connected(l2);

  std::optional<ConnectedSeparatorAnswer> augmented;
  if (!l2.empty()) {
    const SeparatorRecord& b1 = *l2.front();
    const ComponentSplit split = components_after_removal(g, b1.vertices);
    Vertex u = 0;
    bool found = false;
    for (const auto& comp : split.components) {
      if (comp.size() == 1) {
        u = comp.front();
        found = true;
        break;
      }
    }
    // Singleton components exist because at most one component of G \ b_1
    // is non-trivial and b_1 leaves at least three.
    if (!found) throw FindingError("L2 separator without a singleton component", serialize_edge_list(g));
    VertexSet aug = b1.vertices.with(u);
    if (!connected_and_separating(g, aug)) {
      throw FindingError("augmented L2 separator is not a connected separator", serialize_edge_list(g));
    }
    augmented = answer(std::move(aug), ConnectedProvenance::kAugmentedMvs);
  }
  const std::size_t aug_size = augmented ? augmented->cardinality : 0;

  const auto from = [](const SeparatorRecord* r, ConnectedProvenance p) { return answer(r->vertices, p); };
  const auto two = ConnectedProvenance::kTwoComponentMvs;
  const auto many = ConnectedProvenance::kManyComponentMvs;

  if (a_p && b_q) {
    if (a_p->vertices.size() < b_q->vertices.size() && a_p->vertices.size() < aug_size) return from(a_p, two);
    if (b_q->vertices.size() < aug_size) return from(b_q, many);
    return *augmented;
  }
  if (a_p) {
    if (!augmented || a_p->vertices.size() < aug_size) return from(a_p, two);
    return *augmented;
  }
  if (b_q) {
    if (b_q->vertices.size() < aug_size) return from(b_q, many);
    return *augmented;
  }
  if (augmented) return *augmented;
  return {};
}

}  // namespace

const char* to_string(ConnectedProvenance p) {
  switch (p) {
    case ConnectedProvenance::kNone: return "none";
    case ConnectedProvenance::kTwoComponentMvs: return "connected-mvs-two-components";
    case ConnectedProvenance::kManyComponentMvs: return "connected-mvs-many-components";
    case ConnectedProvenance::kAugmentedMvs: return "augmented-mvs";
    case ConnectedProvenance::kAugmentedAny: return "augmented-mvs-any-component";
    case ConnectedProvenance::kSubsetSearch: return "subset-search";
  }
  return "?";
}

std::vector<SeparatorRecord> enumerate_mvs(const Graph& g, const MvsOptions& options) {
  require_connected(g, "enumerate_mvs");
  if (g.is_complete()) {
    if (!options.complete_graph_convention) {
      throw PreconditionError(PKind::kCompleteGraph, "enumerate_mvs: a complete graph has no vertex separator");
    }
    std::vector<SeparatorRecord> out;
    for (Vertex v = 0; v < g.n(); ++v) {
      SeparatorRecord rec;
      rec.vertices = g.neighborhood(v);
      rec.component_count = 1;
      rec.source_vertices = {v};
      if (!rec.vertices.empty()) fill_flags(g, rec);
      out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(),
              [](const SeparatorRecord& a, const SeparatorRecord& b) { return BySizeThenLex{}(a.vertices, b.vertices); });
    return out;
  }
  if (options.check_input) require_2k2_free(g);

  std::map<VertexSet, SeparatorRecord, BySizeThenLex> found;
  for (Vertex v = 0; v < g.n(); ++v) {
    VertexSet s = g.neighborhood(v);
    if (auto it = found.find(s); it != found.end()) {
      it->second.source_vertices.push_back(v);
      continue;
    }
    const std::size_t count = accepted_components(g, s);
    if (count < 2) continue;
    SeparatorRecord rec;
    rec.vertices = s;
    rec.component_count = count;
    rec.source_vertices = {v};
    found.emplace(std::move(s), std::move(rec));
  }

  std::vector<SeparatorRecord> out;
  out.reserve(found.size());
  for (auto& [key, rec] : found) {
    bool minimal = is_minimal_separator(g, rec.vertices);
    if (minimal && g.n() <= 18) minimal = is_minimal_separator_by_subsets(g, rec.vertices);
    if (!minimal) {
      throw FindingError("accepted neighbourhood " + rec.vertices.to_string() + " is not a minimal separator",
                         serialize_edge_list(g));
    }
    fill_flags(g, rec);
    out.push_back(std::move(rec));
  }
  return out;
}

SeparatorRecord classify_separator(const Graph& g, const VertexSet& s) {
  if (s.empty() || !is_separator(g, s)) {
    throw PreconditionError(PKind::kNotSeparator, s.to_string() + " does not separate the graph");
  }
  SeparatorRecord rec;
  rec.vertices = s;
  rec.component_count = components_after_removal(g, s).count();
  fill_flags(g, rec);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == s.size() && g.neighborhood(v) == s) rec.source_vertices.push_back(v);
  }
  return rec;
}

ConnectedSeparatorAnswer min_connected_separator(const Graph& g, const ConnectedSeparatorOptions& options) {
  require_input(g, options.check_input, "min_connected_separator");
  MvsOptions mvs_options;
  mvs_options.check_input = false;
  const auto mvs = enumerate_mvs(g, mvs_options);

  ConnectedSeparatorAnswer best = paper_answer(g, mvs);
  if (options.mode == SeparatorMode::kExhaustive) {
    for (const auto& rec : mvs) {
      const ComponentSplit split = components_after_removal(g, rec.vertices);
      for (const auto& comp : split.components) {
        for (Vertex w : comp) {
          auto candidate = answer(rec.vertices.with(w), ConnectedProvenance::kAugmentedAny);
          if (better(candidate, best) && connected_and_separating(g, candidate.vertices)) best = std::move(candidate);
        }
      }
    }
    if (g.n() <= options.subset_search_limit) {
      if (auto s = subset_search(g)) {
        auto candidate = answer(std::move(*s), ConnectedProvenance::kSubsetSearch);
        if (better(candidate, best)) best = std::move(candidate);
      }
    }
  }
  if (best.exists && !connected_and_separating(g, best.vertices)) {
    throw FindingError("returned set " + best.vertices.to_string() + " is not a connected separator",
                       serialize_edge_list(g));
  }
  return best;
}

std::optional<SeparatorRecord> min_stable_separator(const Graph& g) {
  require_input(g, true, "min_stable_separator");
  MvsOptions options;
  options.check_input = false;
  for (auto& rec : enumerate_mvs(g, options)) {
    if (rec.stable) return std::move(rec);
  }
  return std::nullopt;
}

std::optional<SeparatorRecord> min_clique_separator(const Graph& g) {
  require_input(g, true, "min_clique_separator");
  MvsOptions options;
  options.check_input = false;
  for (auto& rec : enumerate_mvs(g, options)) {
    if (rec.clique) return std::move(rec);
  }
  return std::nullopt;
}

}  // namespace k2free
