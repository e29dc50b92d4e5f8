#include <gtest/gtest.h>

#include "k2free/bitset.hpp"
#include "k2free/error.hpp"
#include "k2free/graph.hpp"
#include "k2free/graph_io.hpp"
#include "k2free/structure.hpp"
#include "k2free/vertex_set.hpp"

namespace k2free {
namespace {

TEST(VertexSet, FromUnsortedCanonicalizes) {
  const auto s = VertexSet::from_unsorted({4, 1, 4, 2});
  EXPECT_EQ(s, (VertexSet{1, 2, 4}));
  EXPECT_EQ(s.to_string(), "{1,2,4}");
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(3));
}

TEST(VertexSet, SetAlgebra) {
  const VertexSet a{0, 2, 4};
  const VertexSet b{1, 2, 3};
  EXPECT_EQ(a.set_union(b), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(a.set_intersection(b), (VertexSet{2}));
  EXPECT_EQ(a.set_difference(b), (VertexSet{0, 4}));
  EXPECT_EQ(a.with(3), (VertexSet{0, 2, 3, 4}));
  EXPECT_EQ(a.without(2), (VertexSet{0, 4}));
  EXPECT_TRUE((VertexSet{2}).is_subset_of(a));
  EXPECT_EQ(VertexSet{}.to_string(), "{}");
}

TEST(VertexSet, CanonicalizeSortsBySizeThenLex) {
  std::vector<VertexSet> family{{1, 3}, {2}, {0, 2}, {2}, {0, 1, 2}};
  canonicalize(family);
  EXPECT_EQ(family, (std::vector<VertexSet>{{2}, {0, 2}, {1, 3}, {0, 1, 2}}));
}

TEST(Bitset, WordBoundaries) {
  Bitset b(130);
  b.set(0);
  b.set(63);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 4U);
  EXPECT_EQ(b.find_first(), 0U);
  EXPECT_EQ(b.find_next(1), 63U);
  EXPECT_EQ(b.find_next(65), 129U);
  EXPECT_EQ(b.find_next(130), 130U);
  Bitset all(130);
  all.set_all();
  EXPECT_EQ(all.count(), 130U);
  EXPECT_TRUE(b.is_subset_of(all));
  all.subtract(b);
  EXPECT_EQ(all.count(), 126U);
  EXPECT_FALSE(all.intersects(b));
}

TEST(Graph, FactoriesAndDegrees) {
  const Graph p4 = Graph::path(4);
  EXPECT_EQ(p4.n(), 4U);
  EXPECT_EQ(p4.m(), 3U);
  EXPECT_EQ(p4.min_degree(), 1U);
  EXPECT_EQ(p4.max_degree(), 2U);
  EXPECT_TRUE(p4.has_edge(2, 1));
  EXPECT_FALSE(p4.has_edge(0, 2));
  EXPECT_EQ(Graph::cycle(5).m(), 5U);
  EXPECT_EQ(Graph::complete(4).m(), 6U);
  EXPECT_TRUE(Graph::complete(4).is_complete());
  EXPECT_EQ(Graph::star(4).degree(0), 4U);
  const Graph k23 = Graph::complete_bipartite(2, 3);
  EXPECT_EQ(k23.m(), 6U);
  EXPECT_EQ(k23.neighborhood(0), (VertexSet{2, 3, 4}));
}

TEST(Graph, FromEdgesRejectsBadInput) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), DomainError);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(3, dup), DomainError);
  const std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, range), DomainError);
}

TEST(Graph, InducedSubgraphRelabels) {
  const Graph c5 = Graph::cycle(5);
  const Subgraph sub = c5.induced({1, 2, 4});
  EXPECT_EQ(sub.graph.n(), 3U);
  EXPECT_EQ(sub.graph.m(), 1U);
  EXPECT_TRUE(sub.graph.has_edge(0, 1));
  EXPECT_EQ(sub.lift({1, 2}), (VertexSet{2, 4}));
}

TEST(Graph, ComplementOfC5IsC5) {
  const Graph c = Graph::cycle(5).complement();
  EXPECT_EQ(c.m(), 5U);
  EXPECT_EQ(c.min_degree(), 2U);
  EXPECT_EQ(c.max_degree(), 2U);
}

TEST(GraphIo, EdgeListRoundTrip) {
  const Graph g = parse_edge_list("# path\n4 3\n0 1\n\n2 1\n2 3\n");
  EXPECT_EQ(g, Graph::path(4));
  EXPECT_EQ(serialize_edge_list(g), "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
}

TEST(GraphIo, DimacsIsOneBased) {
  const Graph g = parse_dimacs("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(g, Graph::complete(3));
}

struct BadDocument {
  const char* text;
  ParseError::Kind kind;
  std::size_t line;
};

class EdgeListErrors : public ::testing::TestWithParam<BadDocument> {};

TEST_P(EdgeListErrors, NamesKindAndLine) {
  const auto& doc = GetParam();
  try {
    parse_edge_list(doc.text);
    FAIL() << "accepted: " << doc.text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), doc.kind) << e.what();
    EXPECT_EQ(e.line(), doc.line) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Documents, EdgeListErrors,
    ::testing::Values(BadDocument{"", ParseError::Kind::kMissingHeader, 1},
                      BadDocument{"3 1\n0 x\n", ParseError::Kind::kMalformedLine, 2},
                      BadDocument{"3 1\n0 1 2\n", ParseError::Kind::kMalformedLine, 2},
                      BadDocument{"3 1\n0 3\n", ParseError::Kind::kOutOfRange, 2},
                      BadDocument{"3 1\n1 1\n", ParseError::Kind::kSelfLoop, 2},
                      BadDocument{"3 2\n0 1\n1 0\n", ParseError::Kind::kDuplicateEdge, 3},
                      BadDocument{"3 1\n0 1\n1 2\n", ParseError::Kind::kEdgeCountMismatch, 3},
                      BadDocument{"3 2\n0 1\n", ParseError::Kind::kEdgeCountMismatch, 3},
                      BadDocument{"0 0\n", ParseError::Kind::kOutOfRange, 1}));

TEST(GraphIo, DimacsRejectsZeroId) {
  EXPECT_THROW(parse_dimacs("p edge 2 1\ne 0 1\n"), ParseError);
}

TEST(GraphIo, SignatureIsStableAndDistinguishes) {
  const auto a = graph_signature(Graph::path(4));
  EXPECT_EQ(a.size(), 16U);
  EXPECT_EQ(a, graph_signature(parse_edge_list("4 3\n2 3\n1 0\n2 1\n")));
  EXPECT_NE(a, graph_signature(Graph::star(3)));
}

TEST(Structure, ComponentsAfterRemoval) {
  const Graph p5 = Graph::path(5);
  const auto split = components_after_removal(p5, {2});
  ASSERT_EQ(split.count(), 2U);
  EXPECT_EQ(split.components[0], (VertexSet{0, 1}));
  EXPECT_EQ(split.components[1], (VertexSet{3, 4}));
  EXPECT_EQ(split.trivial_count, 0U);
  const auto star = components_after_removal(Graph::star(3), {0});
  EXPECT_EQ(star.trivial_count, 3U);
  EXPECT_TRUE(star.nontrivial_indices.empty());
  EXPECT_THROW(components_after_removal(Graph::path(2), {0, 1}), PreconditionError);
}

TEST(Structure, UniversalVertexAndEdge) {
  const Graph c4 = Graph::cycle(4);
  EXPECT_TRUE(is_universal_vertex(c4, {1, 3}, 0));
  EXPECT_FALSE(is_universal_vertex(c4, {1, 2}, 0));
  EXPECT_TRUE(is_universal_vertex(c4, {}, 0));
  EXPECT_THROW(is_universal_vertex(c4, {0, 1}, 0), DomainError);
  const Graph p5 = Graph::path(5);
  EXPECT_FALSE(is_universal_edge(p5, {0, 4}, 1, 2));
  EXPECT_TRUE(is_universal_edge(p5, {0, 3}, 1, 2));
  EXPECT_THROW(is_universal_edge(p5, {0}, 1, 3), DomainError);
  EXPECT_THROW(is_universal_edge(p5, {1}, 1, 2), DomainError);
}

TEST(Structure, ClassifySubset) {
  const Graph k4 = Graph::complete(4);
  EXPECT_EQ(classify_subset(k4, {0, 1, 2}), (SubsetClass{false, true, true}));
  const Graph c4 = Graph::cycle(4);
  EXPECT_EQ(classify_subset(c4, {0, 2}), (SubsetClass{true, false, false}));
  EXPECT_EQ(classify_subset(c4, {1}), (SubsetClass{true, true, true}));
  EXPECT_EQ(classify_subset(Graph::path(4), {0, 1, 2}), (SubsetClass{false, false, true}));
  EXPECT_THROW(classify_subset(c4, {}), DomainError);
}

TEST(Structure, Predicates) {
  EXPECT_EQ(graph_predicates(Graph::cycle(4)), (GraphPredicates{true, true, false}));
  EXPECT_EQ(graph_predicates(Graph::cycle(5)), (GraphPredicates{true, false, false}));
  EXPECT_EQ(graph_predicates(Graph::star(3)), (GraphPredicates{true, true, true}));
  EXPECT_EQ(graph_predicates(Graph::empty(2)), (GraphPredicates{false, true, true}));
  EXPECT_TRUE(is_acyclic_without(Graph::cycle(5), {3}));
  EXPECT_FALSE(is_acyclic_without(Graph::complete(4), {3}));
}

TEST(Structure, SeparatorPredicatesAgree) {
  const Graph c6 = Graph::cycle(6);
  EXPECT_TRUE(is_separator(c6, {0, 3}));
  EXPECT_TRUE(is_minimal_separator(c6, {0, 3}));
  EXPECT_TRUE(is_minimal_separator_by_subsets(c6, {0, 3}));
  EXPECT_TRUE(is_separator(c6, {0, 1, 3}));
  EXPECT_FALSE(is_minimal_separator(c6, {0, 1, 3}));
  EXPECT_FALSE(is_minimal_separator_by_subsets(c6, {0, 1, 3}));
  EXPECT_FALSE(is_separator(c6, {0}));
  EXPECT_FALSE(is_separator(Graph::complete(3), {0, 1}));
}

TEST(Structure, RequireConnected) {
  EXPECT_NO_THROW(require_connected(Graph::path(3), "t"));
  try {
    require_connected(Graph::empty(2), "t");
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.kind(), PreconditionError::Kind::kDisconnected);
  }
}

}  // namespace
}  // namespace k2free
