#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "k2free/graph.hpp"

namespace k2free {

struct GraphFilter {
  bool two_k2_free = false;
  bool c3_free = false;
  bool c4_free = false;
  bool c5_free = false;
};

/// Pull-based stream over every connected labeled graph on n vertices
/// (1 <= n <= 7) that passes the filter. Edge-subset masks are visited in
/// increasing order, with bit i standing for the i-th pair in
/// (0,1), (0,2), ..., (n-2,n-1) order.
class ConnectedGraphStream {
 public:
  static constexpr std::size_t kMaxVertices = 7;

  explicit ConnectedGraphStream(std::size_t n, GraphFilter filter = {});

  std::optional<Graph> next();

  /// Mask of the graph most recently returned by next().
  std::uint64_t last_mask() const noexcept { return last_mask_; }

 private:
  std::size_t n_;
  GraphFilter filter_;
  std::vector<Edge> pairs_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t end_mask_ = 0;
  std::uint64_t last_mask_ = 0;
};

/// Seeded source shared by the generators: mt19937_64 with doubles taken
/// from the top 53 bits, so output is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

 private:
  std::mt19937_64 engine_;
};

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

/// Clique K on the first round(n * clique_fraction) vertices (at least one
/// on each side), independent set on the rest, each K-I pair joined with
/// probability p_cross. Redrawn until connected; throws
/// PreconditionError(kDegenerate) for degenerate parameters or when 1000
/// draws all come out disconnected.
Graph gen_split_graph(std::size_t n, double clique_fraction, double p_cross, std::uint64_t seed);

/// First connected 2K2-free draw of G(n, p) within max_tries attempts.
std::optional<Graph> gen_2k2_free_rejection(std::size_t n, double p, std::uint64_t seed, std::size_t max_tries);

/// Random bipartite graph: sides 0..left-1 and left..left+right-1, each
/// cross pair present with probability p.
Graph gen_bipartite_gnp(std::size_t left, std::size_t right, double p, std::uint64_t seed);

/// Connected bipartite graph with nested neighbourhoods (a chain graph),
/// hence 2K2-, C3- and C5-free. Left vertex i is joined to the first t_i
/// right vertices, with t_0 = right and the other t_i uniform in 1..right.
Graph gen_chain_graph(std::size_t left, std::size_t right, std::uint64_t seed);

/// Same graph with vertex ids permuted uniformly at random.
Graph relabel(const Graph& g, std::uint64_t seed);

}  // namespace k2free
