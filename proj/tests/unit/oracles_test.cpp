#include <gtest/gtest.h>

#include "k2free/error.hpp"
#include "k2free/generators.hpp"
#include "k2free/oracles.hpp"
#include "k2free/structure.hpp"

namespace k2free {
namespace {

TEST(OracleSeparators, Examples) {
  EXPECT_EQ(oracle::minimal_separators(Graph::path(4)), (std::vector<VertexSet>{{1}, {2}}));
  EXPECT_EQ(oracle::minimal_separators(Graph::cycle(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_TRUE(oracle::minimal_separators(Graph::complete(4)).empty());
}

TEST(OracleSeparators, MembersAreLiterallyMinimal) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_gnp(10, 0.35, seed);
    if (!is_connected(g)) continue;
    ++checked;
    for (const auto& s : oracle::minimal_separators(g)) EXPECT_TRUE(is_minimal_separator_by_subsets(g, s));
  }
  EXPECT_GT(checked, 5);
}

TEST(OracleSeparators, SizeCap) {
  EXPECT_THROW(oracle::minimal_separators(Graph::path(19)), PreconditionError);
}

TEST(OracleMis, Examples) {
  EXPECT_EQ(oracle::maximal_independent_sets(Graph::cycle(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(oracle::maximal_independent_sets(Graph::complete(3)), (std::vector<VertexSet>{{0}, {1}, {2}}));
  EXPECT_EQ(oracle::maximal_independent_sets(Graph::empty(3)), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_THROW(oracle::maximal_independent_sets(Graph::path(21)), PreconditionError);
}

TEST(OracleFvs, Examples) {
  EXPECT_TRUE(oracle::min_fvs(Graph::star(5)).empty());
  EXPECT_EQ(oracle::min_fvs(Graph::cycle(5)), (VertexSet{0}));
  EXPECT_EQ(oracle::min_fvs(Graph::complete(4)), (VertexSet{0, 1}));
  EXPECT_THROW(oracle::min_fvs(Graph::path(17)), PreconditionError);
}

TEST(OracleFvs, ResultLeavesForest) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_gnp(9, 0.4, seed);
    EXPECT_TRUE(is_acyclic_without(g, oracle::min_fvs(g)));
  }
}

TEST(OracleConnectedSeparator, Examples) {
  EXPECT_EQ(oracle::min_connected_separator(Graph::path(4)), (VertexSet{1}));
  EXPECT_FALSE(oracle::min_connected_separator(Graph::cycle(4)));
  // Removing an adjacent pair from C5 leaves a path and removing a
  // connected triple leaves an edge, so nothing qualifies.
  EXPECT_FALSE(oracle::min_connected_separator(Graph::cycle(5)));
}

TEST(OracleThreeColoring, Examples) {
  const auto c5 = oracle::three_coloring(Graph::cycle(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(*c5, (std::vector<int>{0, 1, 0, 1, 2}));
  EXPECT_FALSE(oracle::three_coloring(Graph::complete(4)));
  const auto p3 = oracle::three_coloring(Graph::path(3));
  ASSERT_TRUE(p3);
  EXPECT_EQ(*p3, (std::vector<int>{0, 1, 0}));
  EXPECT_THROW(oracle::three_coloring(Graph::path(13)), PreconditionError);
}

TEST(Oracles, Deterministic) {
  const Graph g = gen_gnp(11, 0.5, 77);
  EXPECT_EQ(oracle::maximal_independent_sets(g), oracle::maximal_independent_sets(g));
  EXPECT_EQ(oracle::min_fvs(g), oracle::min_fvs(g));
}

}  // namespace
}  // namespace k2free
