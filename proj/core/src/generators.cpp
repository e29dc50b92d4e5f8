#include "k2free/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "k2free/error.hpp"
#include "k2free/recognition.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

using PKind = PreconditionError::Kind;

bool mask_connected(std::size_t n, const std::vector<std::uint8_t>& adj) {
  std::uint8_t seen = 1;
  std::uint8_t frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (frontier >> v & 1U) next |= adj[v];
    }
    next &= static_cast<std::uint8_t>(~seen);
    seen |= next;
    frontier = next;
  }
  return seen == static_cast<std::uint8_t>((1U << n) - 1);
}

bool passes(const Graph& g, const GraphFilter& f) {
  if (f.two_k2_free && find_2k2_pair(g)) return false;
  if (f.c3_free || f.c4_free || f.c5_free) {
    const SmallCycles c = detect_small_cycles(g);
    if (f.c3_free && c.has_induced_c3) return false;
    if (f.c4_free && c.has_induced_c4) return false;
    if (f.c5_free && c.has_induced_c5) return false;
  }
  return true;
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

ConnectedGraphStream::ConnectedGraphStream(std::size_t n, GraphFilter filter) : n_(n), filter_(filter) {
  if (n < 1 || n > kMaxVertices) {
    throw DomainError("exhaustive enumeration supports 1 <= n <= " + std::to_string(kMaxVertices));
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
  }
  end_mask_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphStream::next() {
  std::vector<std::uint8_t> adj(n_);
  std::vector<Edge> edges;
  while (next_mask_ < end_mask_) {
    const std::uint64_t mask = next_mask_++;
    std::fill(adj.begin(), adj.end(), 0);
    edges.clear();
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (!(mask >> i & 1U)) continue;
      const auto [u, v] = pairs_[i];
      adj[u] |= static_cast<std::uint8_t>(1U << v);
      adj[v] |= static_cast<std::uint8_t>(1U << u);
      edges.push_back(pairs_[i]);
    }
    if (!mask_connected(n_, adj)) continue;
    Graph g = Graph::from_edges(n_, edges);
    if (!passes(g, filter_)) continue;
    last_mask_ = mask;
    return g;
  }
  return std::nullopt;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_split_graph(std::size_t n, double clique_fraction, double p_cross, std::uint64_t seed) {
  check_probability(p_cross, "p_cross");
  if (!(clique_fraction > 0.0 && clique_fraction < 1.0) || n < 2) {
    throw PreconditionError(PKind::kDegenerate, "split graph needs n >= 2 and 0 < clique_fraction < 1");
  }
  const auto rounded = static_cast<std::size_t>(std::llround(static_cast<double>(n) * clique_fraction));
  const std::size_t k = std::clamp<std::size_t>(rounded, 1, n - 1);
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u) {
      for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    }
    bool connected = true;
    for (Vertex i = static_cast<Vertex>(k); i < n; ++i) {
      bool any = false;
      for (Vertex c = 0; c < k; ++c) {
        if (rng.bernoulli(p_cross)) {
          edges.emplace_back(c, i);
          any = true;
        }
      }
      connected = connected && any;
    }
    if (connected) return Graph::from_edges(n, edges);
  }
  throw PreconditionError(PKind::kDegenerate, "no connected split graph in 1000 draws");
}

std::optional<Graph> gen_2k2_free_rejection(std::size_t n, double p, std::uint64_t seed, std::size_t max_tries) {
  check_probability(p, "p");
  Rng seeds(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    Graph g = gen_gnp(n, p, seeds.below(~std::uint64_t{0}));
    if (n > 0 && is_connected(g) && !find_2k2_pair(g)) return g;
  }
  return std::nullopt;
}

Graph gen_bipartite_gnp(std::size_t left, std::size_t right, double p, std::uint64_t seed) {
  check_probability(p, "p");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < left; ++a) {
    for (std::size_t b = 0; b < right; ++b) {
      if (rng.bernoulli(p)) edges.emplace_back(a, static_cast<Vertex>(left + b));
    }
  }
  return Graph::from_edges(left + right, edges);
}

Graph gen_chain_graph(std::size_t left, std::size_t right, std::uint64_t seed) {
  if (left == 0 || right == 0) throw PreconditionError(PKind::kDegenerate, "chain graph needs two non-empty sides");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < left; ++a) {
    const std::size_t t = a == 0 ? right : 1 + rng.below(right);
    for (std::size_t b = 0; b < t; ++b) edges.emplace_back(a, static_cast<Vertex>(left + b));
  }
  return Graph::from_edges(left + right, edges);
}

Graph relabel(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> perm(g.n());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.n(), edges);
}

}  // namespace k2free
