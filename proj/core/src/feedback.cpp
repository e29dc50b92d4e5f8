#include "k2free/feedback.hpp"

#include <algorithm>
#include <numeric>

#include "k2free/error.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/recognition.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

using PKind = PreconditionError::Kind;

TwoK2Witness witness_of(Vertex a, Vertex b, Vertex c, Vertex d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (c < a) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return TwoK2Witness{a, b, c, d};
}

/// Outcome of the nested-neighbourhood test on a bipartite graph.
struct ChainCheck {
  bool bipartite = false;
  std::optional<TwoK2Witness> witness;
};

ChainCheck chain_check(const Graph& g) {
  ChainCheck out;
  const auto colour = bipartition(g);
  if (colour.empty()) return out;
  out.bipartite = true;
  std::vector<Vertex> side;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (colour[v] == 0) side.push_back(v);
  }
  std::stable_sort(side.begin(), side.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  std::vector<std::uint32_t> mark(g.n(), 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 1; i < side.size(); ++i) {
    const Vertex small = side[i - 1];
    const Vertex large = side[i];
    ++stamp;
    for (Vertex b : g.neighbors(large)) mark[b] = stamp;
    for (Vertex b : g.neighbors(small)) {
      if (mark[b] == stamp) continue;
      // b sees `small` only; some neighbour of `large` misses `small`.
      std::vector<char> near_small(g.n(), 0);
      for (Vertex x : g.neighbors(small)) near_small[x] = 1;
      for (Vertex c : g.neighbors(large)) {
        if (!near_small[c]) {
          out.witness = witness_of(small, b, large, c);
          return out;
        }
      }
    }
  }
  return out;
}

VertexSet minus_lowest(const VertexSet& s) {
  if (s.empty()) return s;
  return s.without(s.front());
}

struct SeparatorParts {
  VertexSet t;
  std::optional<VertexSet> g1;
  std::size_t nontrivial = 0;
};

SeparatorParts parts_of(const Graph& g, const VertexSet& s) {
  const ComponentSplit split = components_after_removal(g, s);
  SeparatorParts p;
  std::vector<Vertex> trivial;
  for (const auto& comp : split.components) {
    if (comp.size() == 1) trivial.push_back(comp.front());
  }
  p.t = VertexSet::from_unsorted(std::move(trivial));
  p.nontrivial = split.nontrivial_indices.size();
  if (p.nontrivial > 0) p.g1 = split.components[split.nontrivial_indices.front()];
  return p;
}

VertexSet universal_in(const Graph& g, const VertexSet& part, const VertexSet& s) {
  const Bitset s_mask = g.mask_of(s);
  std::vector<Vertex> out;
  for (Vertex x : part) {
    if (s_mask.is_subset_of(g.row(x))) out.push_back(x);
  }
  return VertexSet::from_sorted(std::move(out));
}

std::size_t s_neighbours(const Graph& g, Vertex x, const Bitset& s_mask) {
  Bitset hit = g.row(x);
  hit &= s_mask;
  return hit.count();
}

void require_c3c5_input(const Graph& g) {
  require_connected(g, "fvs_c3c5");
  const ChainCheck check = chain_check(g);
  if (!check.bipartite) {
    throw PreconditionError(PKind::kSubclassMismatch,
                            std::string("fvs_c3c5 needs a 2K2-C3-C5-free graph, got ") +
                                to_string(classify_subclass(g)));
  }
  if (check.witness) throw NotTwoK2FreeError(*check.witness);
}

FvsResult acyclic_result() {
  FvsResult r;
  r.case_tag = FvsCase::kAcyclic;
  return r;
}

FvsResult closed_form(const Graph& g, const VertexSet& s) {
  const SeparatorParts parts = parts_of(g, s);
  if (parts.nontrivial > 1) {
    throw FindingError("separator " + s.to_string() + " leaves two non-trivial components", serialize_edge_list(g));
  }
  FvsResult r;
  r.s = s;
  r.t = parts.t;
  VertexSet first;
  VertexSet second;
  if (!parts.g1) {
    r.case_tag = FvsCase::kCaseI;
    first = minus_lowest(s);
    second = minus_lowest(parts.t);
  } else {
    const VertexSet u = universal_in(g, *parts.g1, s);
    r.u = u;
    if (u.empty()) {
      throw FindingError("non-trivial component has no vertex adjacent to all of " + s.to_string(),
                         serialize_edge_list(g));
    }
    if (is_acyclic(g.induced(*parts.g1).graph)) {
      r.case_tag = FvsCase::kCaseII;
      first = s;
      second = u.set_union(minus_lowest(parts.t));
    } else {
      r.case_tag = FvsCase::kCaseIII;
      first = u.set_union(minus_lowest(parts.t));
      second = minus_lowest(u).set_union(minus_lowest(s));
    }
  }
  r.vertices = second.size() < first.size() ? second : first;
  r.cardinality = r.vertices.size();
  if (!is_acyclic_without(g, r.vertices)) {
    throw FindingError("removing " + r.vertices.to_string() + " leaves a cycle", serialize_edge_list(g));
  }
  return r;
}

}  // namespace

const char* to_string(SubclassTag tag) {
  switch (tag) {
    case SubclassTag::kC3C4Free: return "2K2-C3-C4-free";
    case SubclassTag::kC3C5Free: return "2K2-C3-C5-free";
    case SubclassTag::kTwoK2FreeOnly: return "2K2-free-only";
    case SubclassTag::kNotTwoK2Free: return "not-2K2-free";
  }
  return "?";
}

const char* to_string(FvsCase c) {
  switch (c) {
    case FvsCase::kAcyclic: return "acyclic";
    case FvsCase::kC5Graph: return "c5-graph";
    case FvsCase::kCaseI: return "thm5-i";
    case FvsCase::kCaseII: return "thm5-ii";
    case FvsCase::kCaseIII: return "thm5-iii";
  }
  return "?";
}

SubclassTag classify_subclass(const Graph& g) {
  require_connected(g, "classify_subclass");
  const ChainCheck chain = chain_check(g);
  if (chain.bipartite) {
    // A bipartite 2K2-free graph with a cycle has an induced C4: its
    // shortest cycle is induced, even, and longer ones contain a 2K2.
    if (chain.witness) return SubclassTag::kNotTwoK2Free;
    return is_acyclic(g) ? SubclassTag::kC3C4Free : SubclassTag::kC3C5Free;
  }
  try {
    require_2k2_free(g);
  } catch (const NotTwoK2FreeError&) {
    return SubclassTag::kNotTwoK2Free;
  }
  const SmallCycles cycles = detect_small_cycles(g);
  if (!cycles.has_induced_c3 && !cycles.has_induced_c4) return SubclassTag::kC3C4Free;
  if (!cycles.has_induced_c3 && !cycles.has_induced_c5) return SubclassTag::kC3C5Free;
  return SubclassTag::kTwoK2FreeOnly;
}

bool is_c3c5_free_member(const Graph& g) {
  if (g.n() == 0 || !is_connected(g)) return false;
  const ChainCheck check = chain_check(g);
  return check.bipartite && !check.witness;
}

FvsResult fvs_c3c4(const Graph& g) {
  const SubclassTag tag = classify_subclass(g);
  if (tag != SubclassTag::kC3C4Free) {
    throw PreconditionError(PKind::kSubclassMismatch,
                            std::string("fvs_c3c4 needs a 2K2-C3-C4-free graph, got ") + to_string(tag));
  }
  if (is_acyclic(g)) return acyclic_result();
  const bool is_c5 = g.n() == 5 && g.m() == 5 && g.min_degree() == 2 && g.max_degree() == 2;
  if (!is_c5) throw FindingError("cyclic (2K2,C3,C4)-free graph other than C5", serialize_edge_list(g));
  FvsResult r;
  r.case_tag = FvsCase::kC5Graph;
  r.vertices = VertexSet{0};
  r.cardinality = 1;
  if (!is_acyclic_without(g, r.vertices)) throw FindingError("C5 minus a vertex has a cycle", serialize_edge_list(g));
  return r;
}

FvsResult fvs_c3c5(const Graph& g) {
  require_c3c5_input(g);
  if (is_acyclic(g)) return acyclic_result();
  MinDegreeOptions options;
  options.check_input = false;
  return closed_form(g, min_degree_separator(g, options));
}

FvsResult fvs_c3c5(const Graph& g, const VertexSet& separator) {
  require_c3c5_input(g);
  if (is_acyclic(g)) return acyclic_result();
  if (!is_minimal_separator(g, separator)) {
    throw PreconditionError(PKind::kNotSeparator, separator.to_string() + " is not a minimal separator");
  }
  return closed_form(g, separator);
}

std::vector<std::string> c3c5_structure_violations(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  const SubsetClass cls = classify_subset(g, s);
  if (!cls.independent) out.emplace_back("s-independent");
  const SeparatorParts parts = parts_of(g, s);
  if (parts.nontrivial > 1) out.emplace_back("one-component");
  if (!parts.g1) return out;
  const Bitset g1_mask = g.mask_of(*parts.g1);
  for (Vertex x : s) {
    Bitset inside = g.row(x);
    inside &= g1_mask;
    bool stable = true;
    inside.for_each([&](Vertex y) { stable = stable && !g.row(y).intersects(inside); });
    if (!stable) {
      out.emplace_back("neighbourhood-stable");
      break;
    }
  }
  const Bitset s_mask = g.mask_of(s);
  for (Vertex a : *parts.g1) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || !g1_mask.test(b)) continue;
      const std::size_t na = s_neighbours(g, a, s_mask);
      const std::size_t nb = s_neighbours(g, b, s_mask);
      const bool split = (na == s.size() && nb == 0) || (nb == s.size() && na == 0);
      if (!split) {
        out.emplace_back("edge-split");
        return out;
      }
    }
  }
  return out;
}

std::vector<std::string> c3c4_structure_violations(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  const SubsetClass cls = classify_subset(g, s);
  if (!cls.independent) out.emplace_back("s-independent");
  const SeparatorParts parts = parts_of(g, s);
  if (parts.nontrivial > 1) out.emplace_back("one-component");
  if (s.size() > 1 && parts.t.size() != 1) out.emplace_back("one-trivial");
  if (!parts.g1) return out;
  const Bitset g1_mask = g.mask_of(*parts.g1);
  bool partition_ok = true;
  for (Vertex a : *parts.g1) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || !g1_mask.test(b)) continue;
      Bitset sa = g.row(a);
      sa &= g.mask_of(s);
      Bitset sb = g.row(b);
      sb &= g.mask_of(s);
      if (sa.intersects(sb) || sa.count() + sb.count() != s.size()) partition_ok = false;
    }
  }
  if (!partition_ok) out.emplace_back("edge-partition");
  const Bitset s_mask = g.mask_of(s);
  bool at_most_one = true;
  bool exactly_one = true;
  for (Vertex x : *parts.g1) {
    const std::size_t k = s_neighbours(g, x, s_mask);
    at_most_one = at_most_one && k <= 1;
    exactly_one = exactly_one && k == 1;
  }
  if (!at_most_one) out.emplace_back("at-most-one-s-neighbour");
  if (!exactly_one) out.emplace_back("exactly-one-s-neighbour");
  return out;
}

}  // namespace k2free
