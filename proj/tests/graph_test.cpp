#include <gtest/gtest.h>

#include "alliance/graph.hpp"

namespace alliance {
namespace {

TEST(VertexSet, BasicOperations) {
  VertexSet s{0, 2, 5};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.first(), 0u);
  EXPECT_EQ(s.last(), 5u);
  EXPECT_EQ(s.to_string(), "{0,2,5}");
  EXPECT_EQ((s - VertexSet{2}).to_vector(), (std::vector<Vertex>{0, 5}));
  EXPECT_TRUE(VertexSet({0, 5}).subset_of(s));
  EXPECT_EQ(VertexSet::range(4).bits(), 0xFu);
  EXPECT_EQ(VertexSet().to_string(), "{}");
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph(0), InputError);
  EXPECT_THROW(Graph(63), InputError);
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
}

TEST(Graph, EdgesAreSortedAndDeduplicatedByOrientation) {
  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_FALSE(g.adjacent(2, 3));
}

TEST(Graph, LeavesAndSupports) {
  // Spider: center 0 with legs 0-1-2 and 0-3, plus leaf 4 on 0.
  const Graph g(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}});
  EXPECT_EQ(leaves(g), (VertexSet{2, 3, 4}));
  EXPECT_EQ(supports(g), (VertexSet{0, 1}));
  EXPECT_EQ(leaves_at(g, 0), (VertexSet{3, 4}));
  EXPECT_EQ(degree(g, 0), 3u);
}

TEST(Graph, K2HasTwoLeavesEachASupport) {
  const Graph g = make::path(2);
  EXPECT_EQ(leaves(g).size(), 2u);
  EXPECT_EQ(supports(g).size(), 2u);
}

TEST(Graph, ClassPredicates) {
  EXPECT_TRUE(is_tree(make::path(5)));
  EXPECT_TRUE(is_unicyclic(make::cycle(5)));
  EXPECT_FALSE(is_tree(make::cycle(5)));
  EXPECT_TRUE(is_bipartite(make::cycle(6)));
  EXPECT_FALSE(is_bipartite(make::cycle(7)));
  EXPECT_FALSE(is_connected(Graph(3, {{0, 1}})));
  EXPECT_EQ(graph_class_name(make::star(3)), "tree");
  EXPECT_EQ(graph_class_name(make::cycle(4)), "unicyclic");
}

TEST(Graph, CycleOfUnicyclicGraph) {
  // Triangle 1-2-3 with a tail 0-1 and pendant 4 on 3.
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {3, 4}});
  EXPECT_EQ(cycle_vertices(g), (VertexSet{1, 2, 3}));
  const CycleStats stats = cycle_stats(g);
  EXPECT_EQ(stats.cycle_length, 3u);
  EXPECT_EQ(stats.cycle_support_count, 2u);
  EXPECT_EQ(stats.cycle_leaf_count, 2u);
  EXPECT_THROW(cycle_vertices(make::path(4)), DomainError);
}

TEST(Graph, InducedAndRelabeled) {
  const Graph c = make::cycle(5);
  const Graph p = c.induced(VertexSet{0, 1, 2});
  EXPECT_EQ(p, make::path(3));
  const std::vector<Vertex> mapping{4, 3, 2, 1, 0};
  const Graph r = c.relabeled(mapping);
  EXPECT_EQ(r.size(), 5u);
  EXPECT_TRUE(r.adjacent(4, 3));
  EXPECT_TRUE(r.adjacent(0, 4));
}

TEST(Graph, Makers) {
  EXPECT_EQ(make::star(4).order(), 5u);
  EXPECT_EQ(degree(make::star(4), 0), 4u);
  EXPECT_EQ(make::cycle(3).size(), 3u);
  EXPECT_EQ(make::path(1).size(), 0u);
}

}  // namespace
}  // namespace alliance
