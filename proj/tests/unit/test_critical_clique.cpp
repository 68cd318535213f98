#include <gtest/gtest.h>

#include <random>

#include "bnpg/critical_clique.hpp"
#include "bnpg/generators.hpp"
#include "helpers.hpp"

using namespace bnpg;
using namespace bnpg::testing;

TEST(CcGraph, CompleteGraphIsOneClique) {
  const auto cc = build_cc_graph(make_complete(5));
  EXPECT_EQ(cc.clique_count(), 1U);
  EXPECT_TRUE(cc.cc_edges.empty());
  EXPECT_TRUE(is_forest(cc));
}

TEST(CcGraph, PathIsItsOwnQuotient) {
  const auto cc = build_cc_graph(make_path(3));
  EXPECT_EQ(cc.clique_count(), 3U);
  EXPECT_EQ(cc.quotient(), make_path(3));
  EXPECT_TRUE(is_forest(cc));
}

TEST(CcGraph, FourCycleIsNotAForest) {
  const auto cc = build_cc_graph(make_cycle(4));
  EXPECT_EQ(cc.clique_count(), 4U);
  EXPECT_FALSE(is_forest(cc));
  EXPECT_THROW(rooted_forest(cc), std::invalid_argument);
}

TEST(CcGraph, TwinsMerge) {
  // Triangle 0-1-2 with a pendant 3 on 2: {0, 1} are closed twins.
  const auto cc = build_cc_graph(graph_of(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
  ASSERT_EQ(cc.clique_count(), 3U);
  EXPECT_EQ(cc.cliques[0], (std::vector<Player>{0, 1}));
  EXPECT_EQ(cc.membership[1], 0U);
}

TEST(RootedForest, Shapes) {
  const auto single = rooted_forest(build_cc_graph(make_complete(3)));
  EXPECT_EQ(single.roots, std::vector<std::size_t>{0});
  EXPECT_TRUE(single.children[0].empty());

  // P3 relabelled so the centre is clique 0.
  const auto p3 = rooted_forest(build_cc_graph(graph_of(3, {{0, 1}, {0, 2}})));
  EXPECT_EQ(p3.children[0], (std::vector<std::size_t>{1, 2}));

  const auto star = rooted_forest(build_cc_graph(make_star(4)));
  EXPECT_EQ(star.children[0].size(), 4U);
  EXPECT_EQ(star.post_order.back(), 0U);
  EXPECT_FALSE(star.parent[0]);
  EXPECT_EQ(star.parent[3], 0U);
}

TEST(CcGraph, PartitionLaws) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 200; ++round) {
    GameSpec spec;
    spec.family = round % 2 ? Family::gnp : Family::twin_expanded_tree;
    spec.n = 1 + rng() % 8;
    spec.p = 0.5;
    spec.seed = rng();
    const Graph g = gen_graph(spec);
    const auto cc = build_cc_graph(g);
    auto closed = [&](Player v) {
      std::vector<Player> out(g.neighbors(v).begin(), g.neighbors(v).end());
      out.push_back(v);
      std::sort(out.begin(), out.end());
      return out;
    };
    for (Player u = 0; u < g.player_count(); ++u) {
      for (Player v = u + 1; v < g.player_count(); ++v) {
        EXPECT_EQ(cc.membership[u] == cc.membership[v], closed(u) == closed(v));
      }
    }
    EXPECT_EQ(cc.expand(), g);
    if (spec.family == Family::twin_expanded_tree) EXPECT_TRUE(is_forest(cc));
  }
}
