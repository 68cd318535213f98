#include <gtest/gtest.h>

#include "bnpg/oracle.hpp"
#include "bnpg/reductions.hpp"
#include "corpus.hpp"
#include "graph_enum.hpp"
#include "helpers.hpp"

using namespace bnpg;
using namespace bnpg::testing;

TEST(ThreeRis, TableShape) {
  const auto out = reduce_3ris(make_complete(6));
  const auto g = out.game.externality_table(0);
  ASSERT_EQ(g.size(), 7U);
  EXPECT_EQ(g[3], 3);
  EXPECT_EQ(g[4], 5);
  EXPECT_EQ(g[6], 7);
  EXPECT_EQ(out.game.cost(0), 2);
  EXPECT_FALSE(out.threshold);
  EXPECT_EQ(out.witness_map.size(), 6U);
}

TEST(ThreeRis, SmallGraphs) {
  const Game k4 = reduce_3ris(make_complete(4)).game;
  EXPECT_TRUE(is_psne(k4, Profile::from_mask(4, 0xF)));
  const Game pet = reduce_3ris(make_petersen()).game;
  EXPECT_TRUE(is_psne(pet, Profile::from_mask(10, 0x3FF)));
  EXPECT_EQ(oracle::enum_psne(reduce_3ris(make_complete(3)).game).size(), 1U);
}

TEST(ThreeRis, EquivalenceOnSmallConnectedGraphs) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const auto all = oracle::enum_psne(reduce_3ris(g).game);
      const bool nonempty =
          std::any_of(all.begin(), all.end(), [](const Profile& p) { return !p.empty(); });
      EXPECT_EQ(nonempty, oracle::find_3regular_induced(g).has_value());
    }
  }
}

TEST(Clique, Construction) {
  const auto out = reduce_clique_to_uswc(make_cycle(5), 3);
  const Graph& net = out.game.graph();
  EXPECT_EQ(net.player_count(), 11U);
  EXPECT_EQ(net.edge_count(), 15U);
  for (Player e = 5; e < 10; ++e) EXPECT_EQ(net.degree(e), 3U);
  EXPECT_TRUE(is_bipartite(net));
  EXPECT_LE(diameter(net), 4U);
  EXPECT_EQ(*out.threshold, 9);
  EXPECT_EQ(out.witness_map[5].source, "edge 0-1");
  EXPECT_EQ(out.witness_map.back().source, "special");
  EXPECT_EQ(out.game.externality(10, 3), 5);
  EXPECT_EQ(out.game.cost(10), 5);
}

TEST(Clique, Preconditions) {
  EXPECT_THROW(reduce_clique_to_uswc(make_complete(3), 1), std::invalid_argument);
  EXPECT_THROW(reduce_clique_to_uswc(graph_of(3, {{0, 1}}), 2), std::invalid_argument);
}

TEST(Clique, WarnsWhenAllAbstainReachesThreshold) {
  const auto tight = reduce_clique_to_uswc(make_complete(3), 3);
  ASSERT_EQ(tight.warnings.size(), 1U);
  EXPECT_EQ(*tight.threshold, 3);
  EXPECT_GE(usw(tight.game, Profile(7)), *tight.threshold);
  EXPECT_TRUE(reduce_clique_to_uswc(make_complete(6), 2).warnings.empty());
}

TEST(Clique, StructureOnSmallGraphs) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      if (has_isolated_vertex(g)) continue;
      const Graph net = reduce_clique_to_uswc(g, 2).game.graph();
      EXPECT_TRUE(is_bipartite(net));
      EXPECT_LE(diameter(net), 4U);
      EXPECT_EQ(net.edge_count(), 3 * g.edge_count());
    }
  }
}

TEST(Rbds, Construction) {
  const RedBlueGraph rb{make_star(2), {false, true, true}};
  const auto out = reduce_rbds_to_eswc(rb, 1);
  const Game& g = out.game;
  EXPECT_EQ(g.player_count(), 4U);
  EXPECT_TRUE(g.graph().adjacent(0, 3));
  EXPECT_FALSE(g.graph().adjacent(1, 3));
  EXPECT_EQ(*out.threshold, 1);
  EXPECT_EQ(g.externality(0, 1), 2);
  EXPECT_EQ(g.externality(1, 0), 0);
  EXPECT_EQ(g.externality(3, 1), 1);
  EXPECT_EQ(g.externality(3, 2), 0);
}

TEST(Rbds, Preconditions) {
  const RedBlueGraph rb{graph_of(2, {{0, 1}}), {true, false}};
  EXPECT_THROW(reduce_rbds_to_eswc(rb, 0), std::invalid_argument);
  const RedBlueGraph mono{graph_of(2, {{0, 1}}), {true, true}};
  EXPECT_THROW(reduce_rbds_to_eswc(mono, 1), std::invalid_argument);
  const RedBlueGraph lonely{graph_of(3, {{0, 1}}), {true, false, false}};
  EXPECT_THROW(reduce_rbds_to_eswc(lonely, 1), std::invalid_argument);
}

TEST(Rbds, YesInstanceProfile) {
  for (const auto& rb : rbds_instances(40, 7, 7)) {
    for (std::size_t kappa = 1; kappa <= rb.blue_vertices().size(); ++kappa) {
      const auto chosen = oracle::find_rb_dominating(rb, kappa);
      if (!chosen) continue;
      const auto out = reduce_rbds_to_eswc(rb, kappa);
      const Profile p = Profile::from_players(out.game.player_count(), *chosen);
      EXPECT_EQ(esw(out.game, p), 1);
    }
  }
}

TEST(Rbds, PartitionIsBipartite) {
  for (const auto& rb : rbds_instances(40, 8, 7)) {
    const Game g = reduce_rbds_to_eswc(rb, 1).game;
    const auto special = static_cast<Player>(rb.graph.player_count());
    for (const Edge& e : g.graph().edges()) {
      const bool u_side = e.u == special || rb.is_red(e.u);
      const bool v_side = e.v == special || rb.is_red(e.v);
      EXPECT_NE(u_side, v_side);
    }
  }
}
