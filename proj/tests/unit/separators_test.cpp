#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "k2free/error.hpp"
#include "k2free/generators.hpp"
#include "k2free/oracles.hpp"
#include "k2free/separators.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

std::vector<VertexSet> sets_of(const std::vector<SeparatorRecord>& records) {
  std::vector<VertexSet> out;
  for (const auto& r : records) out.push_back(r.vertices);
  return out;
}

TEST(EnumerateMvs, PathOnFourVertices) {
  const auto mvs = enumerate_mvs(Graph::path(4));
  ASSERT_EQ(mvs.size(), 2U);
  EXPECT_EQ(mvs[0].vertices, (VertexSet{1}));
  EXPECT_EQ(mvs[1].vertices, (VertexSet{2}));
  EXPECT_EQ(mvs[0].component_count, 2U);
  EXPECT_EQ(mvs[1].component_count, 2U);
  EXPECT_EQ(mvs[0].source_vertices, (std::vector<Vertex>{0}));
}

TEST(EnumerateMvs, FourCycleInCanonicalOrder) {
  EXPECT_EQ(sets_of(enumerate_mvs(Graph::cycle(4))), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
}

TEST(EnumerateMvs, FiveCycleHasFiveStablePairs) {
  const auto mvs = enumerate_mvs(Graph::cycle(5));
  ASSERT_EQ(mvs.size(), 5U);
  for (const auto& r : mvs) {
    EXPECT_EQ(r.vertices.size(), 2U);
    EXPECT_TRUE(r.stable);
    EXPECT_FALSE(r.connected);
    EXPECT_EQ(r.component_count, 2U);
  }
  EXPECT_EQ(sets_of(mvs), oracle::minimal_separators(Graph::cycle(5)));
}

TEST(EnumerateMvs, FlagsAgreeWithClassifySubset) {
  const Graph g = gen_split_graph(30, 0.4, 0.5, 11);
  for (const auto& r : enumerate_mvs(g)) {
    const SubsetClass c = classify_subset(g, r.vertices);
    EXPECT_EQ(r.connected, c.connected);
    EXPECT_EQ(r.stable, c.independent);
    EXPECT_EQ(r.clique, c.clique);
    EXPECT_EQ(r.component_count, components_after_removal(g, r.vertices).count());
    EXPECT_TRUE(is_minimal_separator(g, r.vertices));
  }
}

TEST(EnumerateMvs, Preconditions) {
  EXPECT_THROW(enumerate_mvs(Graph::complete(4)), PreconditionError);
  EXPECT_THROW(enumerate_mvs(Graph::path(5)), NotTwoK2FreeError);
  EXPECT_THROW(enumerate_mvs(Graph::empty(2)), PreconditionError);
}

TEST(EnumerateMvs, CompleteGraphConventionIsOptIn) {
  MvsOptions options;
  options.complete_graph_convention = true;
  const auto mvs = enumerate_mvs(Graph::complete(4), options);
  ASSERT_EQ(mvs.size(), 4U);
  EXPECT_EQ(mvs[0].vertices, (VertexSet{0, 1, 2}));
  EXPECT_EQ(mvs[0].component_count, 1U);
}

TEST(EnumerateMvs, SeparatorStructureOnRandomSplitGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_split_graph(25, 0.5, 0.4, seed);
    const auto mvs = enumerate_mvs(g);
    EXPECT_LE(mvs.size(), g.n());
    for (const auto& r : mvs) {
      const auto split = components_after_removal(g, r.vertices);
      EXPECT_LE(split.nontrivial_indices.size(), 1U);
      for (const auto& comp : split.components) {
        if (comp.size() == 1) EXPECT_TRUE(is_universal_vertex(g, r.vertices, comp.front()));
      }
    }
  }
}

TEST(ClassifySeparator, Examples) {
  const auto c4 = classify_separator(Graph::cycle(4), {1, 3});
  EXPECT_EQ(c4.component_count, 2U);
  EXPECT_FALSE(c4.connected);
  EXPECT_TRUE(c4.stable);
  EXPECT_FALSE(c4.clique);
  EXPECT_EQ(c4.source_vertices, (std::vector<Vertex>{0, 2}));

  const auto star = classify_separator(Graph::star(3), {0});
  EXPECT_EQ(star.component_count, 3U);
  EXPECT_TRUE(star.connected && star.stable && star.clique);

  const auto p5 = classify_separator(Graph::path(5), {2});
  EXPECT_EQ(p5.component_count, 2U);
  EXPECT_TRUE(p5.connected && p5.stable && p5.clique);
  EXPECT_TRUE(p5.source_vertices.empty());

  EXPECT_THROW(classify_separator(Graph::cycle(4), {0}), PreconditionError);
}

TEST(MinConnectedSeparator, PathUsesTwoComponentList) {
  const auto a = min_connected_separator(Graph::path(4));
  ASSERT_TRUE(a.exists);
  EXPECT_EQ(a.vertices, (VertexSet{1}));
  EXPECT_EQ(a.cardinality, 1U);
  EXPECT_EQ(a.provenance, ConnectedProvenance::kTwoComponentMvs);
}

TEST(MinConnectedSeparator, FourCycleHasNone) {
  EXPECT_FALSE(min_connected_separator(Graph::cycle(4)).exists);
  ConnectedSeparatorOptions options;
  options.mode = SeparatorMode::kExhaustive;
  EXPECT_FALSE(min_connected_separator(Graph::cycle(4), options).exists);
  EXPECT_FALSE(oracle::min_connected_separator(Graph::cycle(4)));
}

TEST(MinConnectedSeparator, StarCentreFromManyComponentList) {
  const auto a = min_connected_separator(Graph::star(4));
  ASSERT_TRUE(a.exists);
  EXPECT_EQ(a.vertices, (VertexSet{0}));
  EXPECT_EQ(a.provenance, ConnectedProvenance::kManyComponentMvs);
}

TEST(MinConnectedSeparator, AugmentedCandidate) {
  // K_{2,3}: the minimal separators are the two sides, neither connected.
  // Removing {0,1} leaves three singletons, so {0,1} heads the
  // many-component list and {0,1} plus vertex 2 is the answer.
  const Graph k23 = Graph::complete_bipartite(2, 3);
  const auto a = min_connected_separator(k23);
  ASSERT_TRUE(a.exists);
  EXPECT_EQ(a.provenance, ConnectedProvenance::kAugmentedMvs);
  EXPECT_EQ(a.vertices, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(classify_subset(k23, a.vertices).connected);
  EXPECT_TRUE(is_separator(k23, a.vertices));
  EXPECT_EQ(oracle::min_connected_separator(k23)->size(), 3U);
}

TEST(MinConnectedSeparator, ExhaustiveAgreesWithOracleOnRandomGraphs) {
  ConnectedSeparatorOptions options;
  options.mode = SeparatorMode::kExhaustive;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = gen_2k2_free_rejection(9, 0.6, seed, 200);
    if (!g || g->is_complete()) continue;
    const auto got = min_connected_separator(*g, options);
    const auto want = oracle::min_connected_separator(*g);
    ASSERT_EQ(got.exists, want.has_value());
    if (want) EXPECT_EQ(got.cardinality, want->size());
  }
}

TEST(MinStableSeparator, Examples) {
  const auto c5 = min_stable_separator(Graph::cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->vertices.size(), 2U);
  EXPECT_TRUE(c5->stable);
  EXPECT_EQ(min_stable_separator(Graph::path(4))->vertices, (VertexSet{1}));
  EXPECT_FALSE(min_stable_separator(testing::diamond()));
}

TEST(MinCliqueSeparator, Examples) {
  EXPECT_EQ(min_clique_separator(Graph::path(4))->vertices, (VertexSet{1}));
  EXPECT_EQ(min_clique_separator(testing::diamond())->vertices, (VertexSet{0, 1}));
  EXPECT_FALSE(min_clique_separator(Graph::cycle(4)));
}

}  // namespace
}  // namespace k2free
