#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "instances.hpp"
#include "oracles.hpp"
#include "switchmix/errors.hpp"
#include "switchmix/irreducibility.hpp"

using namespace switchmix;

namespace {

DirectedDegreeSequence from_key(const oracle::InOut& key) {
  std::vector<DegreePair> pairs;
  for (const auto& [in, out] : key) pairs.push_back({in, out});
  return DirectedDegreeSequence(pairs);
}

int find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return static_cast<int>(x);
}

// Arc-set difference of two states, as (only in a, only in b).
std::pair<std::vector<Arc>, std::vector<Arc>> arc_difference(const Digraph& a, const Digraph& b) {
  std::vector<Arc> only_a, only_b;
  for (const Arc& x : a.arcs()) {
    if (!b.has_arc(x.tail, x.head)) only_a.push_back(x);
  }
  for (const Arc& x : b.arcs()) {
    if (!a.has_arc(x.tail, x.head)) only_b.push_back(x);
  }
  return {only_a, only_b};
}

}  // namespace

TEST(Triangles, InducedDirectedCyclesOnly) {
  const Digraph cycle(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(induces_directed_triangle(cycle, {0, 1, 2}));
  EXPECT_TRUE(induces_directed_triangle(cycle, {2, 0, 1}));
  EXPECT_EQ(directed_triangles(cycle).size(), 1u);
  // A transitive triangle is not a cycle; an extra back arc spoils induction.
  EXPECT_FALSE(induces_directed_triangle(Digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {0, 2}}), {0, 1, 2}));
  EXPECT_FALSE(induces_directed_triangle(Digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {2, 0}, {1, 0}}), {0, 1, 2}));
  EXPECT_FALSE(induces_directed_triangle(cycle, {0, 0, 1}));
}

TEST(LamarClasses, PartitionTheOutsideByArcCounts) {
  Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(uniform_below(rng, 5));
    std::vector<DegreePair> pairs(static_cast<std::size_t>(n), {2, 2});
    const Digraph g = instances::scrambled(DirectedDegreeSequence(pairs), 30, rng);
    for (const auto& U : directed_triangles(g)) {
      const auto part = lamar_classes(g, U);
      std::vector<int> all;
      for (const auto* cls : {&part.U0, &part.Uminus, &part.Uplus, &part.Upm, &part.leftover}) {
        all.insert(all.end(), cls->begin(), cls->end());
      }
      std::sort(all.begin(), all.end());
      std::vector<int> expected;
      for (int x = 0; x < n; ++x) {
        if (std::find(U.begin(), U.end(), x) == U.end()) expected.push_back(x);
      }
      ASSERT_EQ(all, expected);
      const auto count = [&](int x, bool into) {
        int c = 0;
        for (int u : U) c += (into ? g.has_arc(x, u) : g.has_arc(u, x)) ? 1 : 0;
        return c;
      };
      for (int x : part.U0) EXPECT_TRUE(count(x, true) == 0 && count(x, false) == 0);
      for (int x : part.Uminus) EXPECT_TRUE(count(x, true) == 3 && count(x, false) == 0);
      for (int x : part.Uplus) EXPECT_TRUE(count(x, true) == 0 && count(x, false) == 3);
      for (int x : part.Upm) EXPECT_TRUE(count(x, true) == 3 && count(x, false) == 3);
      for (int x : part.leftover) {
        const int in = count(x, true), back = count(x, false);
        EXPECT_FALSE((in == 0 || in == 3) && (back == 0 || back == 3));
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
  EXPECT_THROW(lamar_classes(Digraph(3, std::vector<Arc>{{0, 1}}), {0, 1, 2}), std::invalid_argument);
}

TEST(FindUseful, WitnessesSatisfyTheirConditions) {
  Rng rng(4);
  int arcs_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + static_cast<int>(uniform_below(rng, 6));
    std::vector<DegreePair> pairs(static_cast<std::size_t>(n), {1, 1});
    if (trial % 2 == 0) std::fill(pairs.begin(), pairs.begin() + 3, DegreePair{2, 2});
    const DirectedDegreeSequence dd(pairs);
    if (!is_digraphical(dd)) continue;
    const Digraph g = instances::scrambled(dd, 30, rng);
    for (const auto& U : directed_triangles(g)) {
      const auto part = lamar_classes(g, U);
      const auto w = find_useful(g, U);
      if (!part.leftover.empty()) {
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(w->kind, UsefulWitness::Kind::neighbour);
        EXPECT_EQ(w->x, *std::min_element(part.leftover.begin(), part.leftover.end()));
        continue;
      }
      const auto in = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
      // Direct scan for any arc meeting either condition.
      bool any = false;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == y || in({U[0], U[1], U[2]}, x) || in({U[0], U[1], U[2]}, y)) continue;
          if (g.has_arc(x, y) && (in(part.U0, x) || in(part.Uplus, x)) && (in(part.U0, y) || in(part.Uminus, y))) any = true;
          if (!g.has_arc(x, y) && (in(part.Uminus, x) || in(part.Upm, x)) && (in(part.Uplus, y) || in(part.Upm, y))) {
            any = true;
          }
        }
      }
      ASSERT_EQ(w.has_value(), any);
      if (!w) continue;
      ++arcs_seen;
      EXPECT_EQ(w->kind, UsefulWitness::Kind::arc);
      if (w->condition == 1) {
        EXPECT_TRUE(g.has_arc(w->x, w->y));
        EXPECT_TRUE(in(part.U0, w->x) || in(part.Uplus, w->x));
        EXPECT_TRUE(in(part.U0, w->y) || in(part.Uminus, w->y));
      } else {
        EXPECT_EQ(w->condition, 2);
        EXPECT_FALSE(g.has_arc(w->x, w->y));
        EXPECT_TRUE(in(part.Uminus, w->x) || in(part.Upm, w->x));
        EXPECT_TRUE(in(part.Uplus, w->y) || in(part.Upm, w->y));
      }
    }
  }
  EXPECT_GT(arcs_seen, 0);
}

TEST(Connectivity, ThreeCycleSequenceIsReducible) {
  const DirectedDegreeSequence dd({{1, 1}, {1, 1}, {1, 1}});
  const auto r = switch_connectivity(dd);
  EXPECT_EQ(r.state_count, 2u);
  EXPECT_EQ(r.transition_count, 0u);
  EXPECT_EQ(r.component_count, 2u);
  EXPECT_FALSE(r.irreducible);
  EXPECT_FALSE(is_switch_irreducible(dd));
  EXPECT_TRUE(is_switch_irreducible(dd, kDefaultStateCap, [](const DirectedDegreeSequence&) { return true; }));
  EXPECT_FALSE(is_switch_irreducible(dd, kDefaultStateCap,
                                     [](const DirectedDegreeSequence&) { return std::optional<bool>{}; }));
  for (const auto& g : enum_states(dd)) {
    ASSERT_EQ(directed_triangles(g).size(), 1u);
    EXPECT_FALSE(find_useful(g, directed_triangles(g)[0]).has_value());
  }
}

TEST(Connectivity, UndirectedSpacesUpToSixVerticesAreConnected) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& [degrees, count] : oracle::graph_degree_histogram(n)) {
      const auto r = switch_connectivity(DegreeSequence(degrees));
      EXPECT_EQ(static_cast<std::int64_t>(r.state_count), count);
      EXPECT_TRUE(r.irreducible) << "n=" << n;
    }
  }
  EXPECT_THROW(switch_connectivity(DegreeSequence({3, 3, 1, 1})), NotRealizable);
  EXPECT_THROW(switch_connectivity(DirectedDegreeSequence({{1, 0}, {0, 0}})), NotRealizable);
}

TEST(Connectivity, TriangleReversalJoinsEveryDirectedSpace) {
  // Switches together with reversals of induced directed 3-cycles connect
  // every digraph space. Components are rebuilt here from pairwise arc
  // differences rather than from the library's adjacency.
  for (int n = 3; n <= 4; ++n) {
    for (const auto& [key, count] : oracle::digraph_degree_histogram(n)) {
      const auto dd = from_key(key);
      const auto states = enum_states(dd);
      const auto r = switch_connectivity(dd);
      std::vector<std::size_t> switch_parent(states.size()), full_parent(states.size());
      std::iota(switch_parent.begin(), switch_parent.end(), 0);
      std::iota(full_parent.begin(), full_parent.end(), 0);
      std::size_t switch_edges = 0;
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
          const auto [gone, added] = arc_difference(states[i], states[j]);
          bool is_switch = false;
          if (gone.size() == 2 && added.size() == 2) {
            const Arc x = gone[0], y = gone[1];
            const bool disjoint = x.tail != y.tail && x.tail != y.head && x.head != y.tail && x.head != y.head;
            const auto has = [&](Arc a) { return std::find(added.begin(), added.end(), a) != added.end(); };
            is_switch = disjoint && has(Arc{x.tail, y.head}) && has(Arc{y.tail, x.head});
          }
          bool is_reversal = false;
          if (gone.size() == 3 && added.size() == 3) {
            is_reversal = true;
            for (const Arc& a : gone) {
              is_reversal = is_reversal && std::find(added.begin(), added.end(), Arc{a.head, a.tail}) != added.end();
            }
          }
          if (is_switch) {
            ++switch_edges;
            switch_parent[find_root(switch_parent, i)] = find_root(switch_parent, j);
          }
          if (is_switch || is_reversal) full_parent[find_root(full_parent, i)] = find_root(full_parent, j);
        }
      }
      std::size_t switch_components = 0, full_components = 0;
      for (std::size_t i = 0; i < states.size(); ++i) {
        switch_components += find_root(switch_parent, i) == static_cast<int>(i) ? 1 : 0;
        full_components += find_root(full_parent, i) == static_cast<int>(i) ? 1 : 0;
      }
      EXPECT_EQ(r.transition_count, switch_edges);
      EXPECT_EQ(r.component_count, switch_components);
      EXPECT_EQ(full_components, 1u);
      for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = 0; j < states.size(); ++j) {
          EXPECT_EQ(r.component_of[i] == r.component_of[j],
                    find_root(switch_parent, i) == find_root(switch_parent, j));
        }
      }
    }
  }
}

TEST(Connectivity, ComponentsOfAHandBuiltGraph) {
  const std::vector<std::vector<std::uint32_t>> adjacency{{1}, {0, 2}, {1}, {}, {5}, {4}};
  const auto r = switch_components(adjacency);
  EXPECT_EQ(r.component_count, 3u);
  EXPECT_EQ(r.component_sizes, (std::vector<std::size_t>{3, 2, 1}));
  EXPECT_EQ(r.transition_count, 3u);
  EXPECT_EQ(r.component_of, (std::vector<std::size_t>{0, 0, 0, 1, 2, 2}));
}
