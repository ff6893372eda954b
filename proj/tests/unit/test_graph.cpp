#include <gtest/gtest.h>

#include <sstream>

#include "switchmix/graph.hpp"
#include "switchmix/io.hpp"

using namespace switchmix;

TEST(Graph, AddRemoveAndDegrees) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_THROW(g.add_edge(0, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(3, 3), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::invalid_argument);
  g.remove_edge(0, 1);
  EXPECT_FALSE(g.has_edge(0, 1));
  EXPECT_EQ(g.degree(1), 1);
  EXPECT_THROW(g.remove_edge(0, 1), std::invalid_argument);
  g.audit();
}

TEST(Graph, ReplaceEdgesIsAtomic) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}, {0, 2}};
  Graph g(4, edges);
  const Graph before = g;
  // {0,3} would be new but {1,2} is fine; {0,2} already exists.
  EXPECT_THROW(g.replace_edges({Edge{0, 1}, Edge{2, 3}}, {Edge{0, 2}, Edge{1, 3}}), std::invalid_argument);
  EXPECT_EQ(g, before);
  // Degree-changing replacement is refused.
  EXPECT_THROW(g.replace_edges({Edge{0, 1}, Edge{2, 3}}, {Edge{0, 3}, Edge{0, 1}}), std::invalid_argument);
  EXPECT_EQ(g, before);
  g.replace_edges({Edge{0, 1}, Edge{2, 3}}, {Edge{0, 3}, Edge{1, 2}});
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.degrees(), before.degrees());
  g.audit();
}

TEST(Graph, EqualityIgnoresStorageOrder) {
  const std::vector<Edge> a{{0, 1}, {1, 2}};
  const std::vector<Edge> b{{1, 2}, {0, 1}};
  EXPECT_EQ(Graph(3, a), Graph(3, b));
  EXPECT_EQ(Graph(3, b).sorted_edges(), a);
}

TEST(Digraph, ArcsAndAntiparallelPairs) {
  Digraph g(3);
  g.add_arc(0, 1);
  g.add_arc(1, 0);
  EXPECT_TRUE(g.has_arc(0, 1));
  EXPECT_TRUE(g.has_arc(1, 0));
  EXPECT_FALSE(g.has_arc(0, 2));
  EXPECT_EQ(g.out_degree(0), 1);
  EXPECT_EQ(g.in_degree(0), 1);
  EXPECT_THROW(g.add_arc(0, 1), std::invalid_argument);
  g.audit();
}

TEST(Digraph, ReplaceArcsPreservesSemiDegrees) {
  const std::vector<Arc> arcs{{0, 1}, {2, 3}};
  Digraph g(4, arcs);
  g.replace_arcs({Arc{0, 1}, Arc{2, 3}}, {Arc{0, 3}, Arc{2, 1}});
  EXPECT_TRUE(g.has_arc(0, 3));
  EXPECT_TRUE(g.has_arc(2, 1));
  EXPECT_EQ(g.out_degree(0), 1);
  EXPECT_EQ(g.in_degree(1), 1);
  const Digraph before = g;
  EXPECT_THROW(g.replace_arcs({Arc{0, 3}, Arc{2, 1}}, {Arc{0, 1}, Arc{3, 2}}), std::invalid_argument);
  EXPECT_EQ(g, before);
}

TEST(EdgeList, RoundTrip) {
  const std::vector<Edge> edges{{0, 3}, {1, 2}, {0, 1}};
  const Graph g(5, edges);
  const std::string text = to_edge_list(g);
  std::istringstream in(text);
  const Graph back = read_graph(in);
  EXPECT_EQ(back, g);
  EXPECT_EQ(to_edge_list(back), text);

  const std::vector<Arc> arcs{{2, 0}, {0, 2}, {1, 0}};
  const Digraph d(3, arcs);
  std::istringstream din(to_edge_list(d));
  EXPECT_EQ(read_digraph(din), d);
}

TEST(RandomPairs, AreDistinctAndOrdered) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = random_distinct_index_pair(5, rng);
    EXPECT_LT(a, b);
    EXPECT_LT(b, 5u);
  }
  const Graph one(2, std::vector<Edge>{{0, 1}});
  EXPECT_THROW(random_distinct_edge_pair(one, rng), std::invalid_argument);
}
