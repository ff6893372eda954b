#include <gtest/gtest.h>

#include "instances.hpp"
#include "oracles.hpp"
#include "switchmix/construct.hpp"
#include "switchmix/errors.hpp"

using namespace switchmix;

TEST(Realize, HitsTheDegreesOfRandomGraphicalSequences) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 30));
    const double p = static_cast<double>(uniform_below(rng, 100)) / 100.0;
    const DegreeSequence d = instances::random_graphical(n, p, rng);
    const Graph g = realize(d);
    g.audit();
    for (int v = 0; v < n; ++v) EXPECT_EQ(g.degree(v), d[v]);
  }
}

TEST(Realize, RefusesExactlyTheNonGraphicalSequences) {
  // Every vector in [0,4]^5 against exhaustive search.
  const auto hist = oracle::graph_degree_histogram(5);
  std::vector<int> d(5, 0);
  while (true) {
    if (hist.contains(d)) {
      EXPECT_NO_THROW(realize(DegreeSequence(d)));
    } else {
      EXPECT_THROW(realize(DegreeSequence(d)), NotRealizable);
    }
    std::size_t k = 0;
    while (k < d.size() && d[k] == 4) d[k++] = 0;
    if (k == d.size()) break;
    ++d[k];
  }
}

TEST(RealizeDirected, MatchesExhaustiveSearch) {
  const auto hist = oracle::digraph_degree_histogram(4);
  std::vector<int> digits(8, 0);
  while (true) {
    std::vector<DegreePair> pairs;
    oracle::InOut key;
    for (int v = 0; v < 4; ++v) {
      pairs.push_back({digits[2 * v], digits[2 * v + 1]});
      key.emplace_back(digits[2 * v], digits[2 * v + 1]);
    }
    const DirectedDegreeSequence dd(pairs);
    if (hist.contains(key)) {
      const Digraph g = realize_directed(dd);
      g.audit();
      for (int v = 0; v < 4; ++v) {
        EXPECT_EQ(g.in_degree(v), pairs[v].in);
        EXPECT_EQ(g.out_degree(v), pairs[v].out);
      }
    } else {
      EXPECT_THROW(realize_directed(dd), NotRealizable);
    }
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 3) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
}

TEST(RealizeDirected, LargeRegular) {
  const DirectedDegreeSequence dd(std::vector<DegreePair>(40, {3, 3}));
  const Digraph g = realize_directed(dd);
  EXPECT_EQ(g.arc_count(), 120u);
  g.audit();
}
