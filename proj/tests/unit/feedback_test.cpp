#include <gtest/gtest.h>

#include "../support/fixtures.hpp"
#include "k2free/error.hpp"
#include "k2free/feedback.hpp"
#include "k2free/generators.hpp"
#include "k2free/oracles.hpp"
#include "k2free/recognition.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

TEST(ClassifySubclass, Examples) {
  EXPECT_EQ(classify_subclass(Graph::cycle(5)), SubclassTag::kC3C4Free);
  EXPECT_EQ(classify_subclass(Graph::complete_bipartite(2, 3)), SubclassTag::kC3C5Free);
  EXPECT_EQ(classify_subclass(Graph::cycle(6)), SubclassTag::kNotTwoK2Free);
  EXPECT_EQ(classify_subclass(Graph::path(4)), SubclassTag::kC3C4Free);
  EXPECT_EQ(classify_subclass(Graph::complete(4)), SubclassTag::kTwoK2FreeOnly);
  EXPECT_THROW(classify_subclass(Graph::empty(2)), PreconditionError);
}

TEST(ClassifySubclass, MatchesPairwiseDefinition) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 4 + seed % 9;
    const Graph g = seed % 3 == 0 ? gen_bipartite_gnp(n / 2, n - n / 2, 0.7, seed) : gen_gnp(n, 0.6, seed);
    if (!is_connected(g)) continue;
    SubclassTag want = SubclassTag::kTwoK2FreeOnly;
    const SmallCycles c = detect_small_cycles(g);
    if (find_2k2_pair(g)) {
      want = SubclassTag::kNotTwoK2Free;
    } else if (!c.has_induced_c3 && !c.has_induced_c4) {
      want = SubclassTag::kC3C4Free;
    } else if (!c.has_induced_c3 && !c.has_induced_c5) {
      want = SubclassTag::kC3C5Free;
    }
    EXPECT_EQ(classify_subclass(g), want) << seed;
  }
}

TEST(FvsC3C4, Examples) {
  const auto p4 = fvs_c3c4(Graph::path(4));
  EXPECT_EQ(p4.cardinality, 0U);
  EXPECT_TRUE(p4.vertices.empty());
  EXPECT_EQ(p4.case_tag, FvsCase::kAcyclic);

  const auto c5 = fvs_c3c4(Graph::cycle(5));
  EXPECT_EQ(c5.cardinality, 1U);
  EXPECT_EQ(c5.vertices, (VertexSet{0}));
  EXPECT_EQ(c5.case_tag, FvsCase::kC5Graph);

  EXPECT_EQ(fvs_c3c4(Graph::star(5)).cardinality, 0U);
  EXPECT_THROW(fvs_c3c4(Graph::cycle(4)), PreconditionError);
}

TEST(FvsC3C5, FourCycle) {
  const auto r = fvs_c3c5(Graph::cycle(4));
  EXPECT_EQ(r.case_tag, FvsCase::kCaseI);
  EXPECT_EQ(r.s, (VertexSet{1, 3}));
  EXPECT_EQ(r.t, (VertexSet{0, 2}));
  EXPECT_EQ(r.cardinality, 1U);
  EXPECT_EQ(r.vertices, (VertexSet{3}));
}

TEST(FvsC3C5, CompleteBipartite) {
  const auto k23 = fvs_c3c5(Graph::complete_bipartite(2, 3));
  EXPECT_EQ(k23.case_tag, FvsCase::kCaseI);
  // Vertex 2 is the lowest-id vertex of minimum degree.
  EXPECT_EQ(k23.s, (VertexSet{0, 1}));
  EXPECT_EQ(k23.t, (VertexSet{2, 3, 4}));
  EXPECT_EQ(k23.cardinality, 1U);
  EXPECT_EQ(k23.vertices, (VertexSet{1}));
  EXPECT_EQ(oracle::min_fvs(Graph::complete_bipartite(2, 3)).size(), 1U);

  const auto k33 = fvs_c3c5(Graph::complete_bipartite(3, 3));
  EXPECT_EQ(k33.case_tag, FvsCase::kCaseI);
  EXPECT_EQ(k33.cardinality, 2U);
  EXPECT_EQ(oracle::min_fvs(Graph::complete_bipartite(3, 3)).size(), 2U);
}

TEST(FvsC3C5, TreesAreAcyclic) {
  const auto r = fvs_c3c5(Graph::star(4));
  EXPECT_EQ(r.case_tag, FvsCase::kAcyclic);
  EXPECT_EQ(r.cardinality, 0U);
}

TEST(FvsC3C5, RejectsOtherClasses) {
  EXPECT_THROW(fvs_c3c5(Graph::cycle(5)), PreconditionError);
  EXPECT_THROW(fvs_c3c5(Graph::cycle(6)), NotTwoK2FreeError);
  EXPECT_THROW(fvs_c3c5(Graph::empty(3)), PreconditionError);
}

TEST(FvsC3C5, ClosedFormIsAlwaysAFeedbackSet) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t left = 1 + seed % 6;
    const std::size_t right = 1 + (seed / 6) % 7;
    const Graph g = relabel(gen_chain_graph(left, right, seed), seed + 1);
    const auto r = fvs_c3c5(g);
    EXPECT_GE(r.cardinality, oracle::min_fvs(g).size()) << seed;
    EXPECT_EQ(r.cardinality, r.vertices.size());
    EXPECT_TRUE(is_acyclic_without(g, r.vertices));
  }
}

// S = {2} leaves K_{2,4} on {0,6} x {3,4,5,7} plus trivials 1 and 8. The
// third case gives 3 but removing {0,2} already leaves a forest: the cycle
// 2-3-6-4 runs through S.
TEST(FvsC3C5, SingleVertexSeparatorCounterexample) {
  const Graph g = testing::make_graph(9, {{0, 3}, {0, 4}, {0, 5}, {0, 7}, {1, 2}, {2, 3}, {2, 4},
                                 {2, 5}, {2, 7}, {2, 8}, {3, 6}, {4, 6}, {5, 6}, {6, 7}});
  const auto r = fvs_c3c5(g);
  EXPECT_EQ(r.case_tag, FvsCase::kCaseIII);
  EXPECT_EQ(r.s, (VertexSet{2}));
  EXPECT_EQ(r.cardinality, 3U);
  EXPECT_EQ(oracle::min_fvs(g), (VertexSet{0, 2}));
  EXPECT_EQ(fvs_c3c5(g, VertexSet{3, 4, 5, 7}).cardinality, 2U);
}

TEST(FvsC3C5, TwoVertexSeparatorCounterexample) {
  const Graph g = testing::make_graph(9, {{0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {2, 5},
                                          {2, 6}, {2, 7}, {2, 8}, {3, 6}, {3, 7}, {3, 8}, {4, 7}, {4, 8}});
  const auto r = fvs_c3c5(g);
  EXPECT_EQ(r.case_tag, FvsCase::kCaseIII);
  EXPECT_EQ(r.s, (VertexSet{7, 8}));
  EXPECT_EQ(r.cardinality, 4U);
  EXPECT_EQ(oracle::min_fvs(g), (VertexSet{5, 6, 7}));
  EXPECT_TRUE(is_acyclic_without(g, r.vertices));
}

TEST(FvsC3C5, EverySeparatorGivesTheSameCardinality) {
  const Graph g = gen_chain_graph(5, 6, 9);
  const auto base = fvs_c3c5(g).cardinality;
  for (const auto& s : oracle::minimal_separators(g)) EXPECT_EQ(fvs_c3c5(g, s).cardinality, base) << s.to_string();
}

TEST(Structure, C3C5PropertiesOnChainGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = gen_chain_graph(2 + seed % 5, 2 + seed % 7, seed);
    for (const auto& s : oracle::minimal_separators(g)) {
      EXPECT_TRUE(c3c5_structure_violations(g, s).empty()) << s.to_string();
    }
  }
}

TEST(Structure, C3C5DetectsBrokenSplit) {
  // The diamond lies outside the class; its clique separator is flagged.
  const Graph g = testing::diamond();
  const auto bad = c3c5_structure_violations(g, {0, 1});
  EXPECT_NE(std::find(bad.begin(), bad.end(), "s-independent"), bad.end());
}

TEST(Structure, C3C4PropertiesOnFiveCycle) {
  const Graph c5 = Graph::cycle(5);
  EXPECT_TRUE(c3c4_structure_violations(c5, {1, 4}).empty());
}

TEST(Structure, ExactlyOneNeighbourFailsOnPaths) {
  // P4 with S = {1}: vertex 3 of the component {2,3} sees no S vertex.
  const auto bad = c3c4_structure_violations(Graph::path(4), {1});
  EXPECT_EQ(bad, (std::vector<std::string>{"exactly-one-s-neighbour"}));
}

TEST(Membership, ChainCheck) {
  EXPECT_TRUE(is_c3c5_free_member(Graph::complete_bipartite(3, 4)));
  EXPECT_TRUE(is_c3c5_free_member(gen_chain_graph(50, 20, 1)));
  EXPECT_FALSE(is_c3c5_free_member(Graph::cycle(6)));
  EXPECT_FALSE(is_c3c5_free_member(Graph::cycle(5)));
  EXPECT_FALSE(is_c3c5_free_member(Graph::empty(2)));
}

}  // namespace
}  // namespace k2free
