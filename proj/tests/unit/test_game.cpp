#include <gtest/gtest.h>

#include <random>

#include "bnpg/game.hpp"
#include "bnpg/generators.hpp"
#include "bnpg/reductions.hpp"
#include "helpers.hpp"

using namespace bnpg;
using namespace bnpg::testing;

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(graph_of(2, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(graph_of(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(graph_of(2, {{0, 2}}), std::invalid_argument);
}

TEST(Graph, DegreesAndNeighbours) {
  const Graph g = make_star(3);
  EXPECT_EQ(g.degree(0), 3U);
  EXPECT_EQ(g.closed_degree(1), 2U);
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_THROW(g.neighbors(4), std::out_of_range);
}

TEST(Graph, PetersenShape) {
  const Graph p = make_petersen();
  EXPECT_EQ(p.edge_count(), 15U);
  for (Player v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3U);
  EXPECT_EQ(diameter(p), 2U);
  EXPECT_FALSE(is_bipartite(p));
}

TEST(Game, ValidatesTables) {
  EXPECT_THROW(Game(Graph(1), {row({0})}, {Rational(1)}), std::invalid_argument);
  EXPECT_THROW(Game(Graph(1), {row({0, -1})}, {Rational(1)}), std::invalid_argument);
  EXPECT_THROW(Game(Graph(1), {row({0, 1})}, {Rational(-1)}), std::invalid_argument);
}

TEST(Payoff, IsolatedPlayer) {
  const Game g = single_player({0, 2}, 1);
  EXPECT_EQ(payoff(g, profile_of(1, {0}), 0), 1);
  EXPECT_EQ(payoff(g, Profile(1), 0), 0);
  EXPECT_THROW(payoff(g, Profile(1), 1), std::out_of_range);
}

TEST(Payoff, EmptyProfileGivesBaseExternality) {
  const Game g = homogeneous(make_path(4), row({3, 1, 1, 1}), Rational(1));
  for (Player v = 0; v < 4; ++v) EXPECT_EQ(payoff(g, Profile(4), v), 3);
  EXPECT_EQ(usw(g, Profile(4)), 12);
  EXPECT_EQ(esw(g, Profile(4)), 3);
}

TEST(Payoff, PetersenAllInvest) {
  const Game g = reduce_3ris(make_petersen()).game;
  const Profile all = Profile::from_mask(10, 0x3FF);
  for (Player v = 0; v < 10; ++v) {
    EXPECT_EQ(payoff(g, all, v), 3);
    EXPECT_EQ(deviation_gain(g, all, v), 0);
  }
  EXPECT_TRUE(is_psne(g, all));
  EXPECT_TRUE(is_psne(g, Profile(10)));
}

TEST(DeviationGain, SingleFlip) {
  EXPECT_EQ(deviation_gain(single_player({0, 2}, 1), Profile(1), 0), 1);
  EXPECT_EQ(deviation_gain(single_player({0, 2}, 3), profile_of(1, {0}), 0), 1);
  EXPECT_FALSE(is_psne(single_player({0, 2}, 1), Profile(1)));
}

TEST(Welfare, ZeroPlayers) {
  const Game empty(Graph(0), {}, {});
  EXPECT_EQ(usw(empty, Profile(0)), 0);
  EXPECT_THROW(esw(empty, Profile(0)), std::invalid_argument);
}

TEST(Welfare, OnePlayerEswEqualsUsw) {
  const Game g = single_player({0, 2}, 1);
  for (const Profile& p : {Profile(1), profile_of(1, {0})}) EXPECT_EQ(esw(g, p), usw(g, p));
}

TEST(Welfare, RbdsPairInstance) {
  const RedBlueGraph rb{graph_of(2, {{0, 1}}), {true, false}};
  const Game g = reduce_rbds_to_eswc(rb, 1).game;
  EXPECT_EQ(esw(g, profile_of(3, {1})), 1);
}

TEST(AttainablePayoffs, SortedDistinct) {
  const auto values = attainable_payoffs(single_player({0, 2}, 1));
  ASSERT_EQ(values.size(), 4U);
  EXPECT_EQ(values.front(), -1);
  EXPECT_EQ(values.back(), 2);
}

TEST(Subgame, PathEndpoints) {
  const Game g = homogeneous(make_path(3), row({0, 1, 2, 3}), Rational(1));
  const std::vector<Player> keep{0, 2};
  const auto view = induce_subgame(g, keep);
  EXPECT_EQ(view.game.player_count(), 2U);
  EXPECT_EQ(view.game.graph().edge_count(), 0U);
  EXPECT_EQ(view.game.externality_table(0).size(), 2U);
  EXPECT_EQ(view.to_parent, keep);
  EXPECT_EQ(view.from_parent[1], SubgameView::kAbsent);
  const Profile lifted = view.lift(profile_of(2, {1}));
  EXPECT_TRUE(lifted.invests(2));
  EXPECT_EQ(view.restrict(lifted), profile_of(2, {1}));
}

TEST(Subgame, AllAndNone) {
  const Game g = homogeneous(make_cycle(4), row({0, 1, 2, 3}), Rational(1));
  const std::vector<Player> all{0, 1, 2, 3};
  EXPECT_EQ(induce_subgame(g, all).game, g);
  EXPECT_EQ(induce_subgame(g, std::vector<Player>{}).game.player_count(), 0U);
  EXPECT_THROW(induce_subgame(g, std::vector<Player>{7}), std::out_of_range);
}

// Definitional laws on random games.
TEST(GameLaws, RandomGames) {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 100; ++round) {
    GameSpec spec;
    spec.family = Family::gnp;
    spec.n = 1 + rng() % 8;
    spec.p = 0.4;
    spec.externality = ExternalityKind::arbitrary;
    spec.cost = CostKind::rational;
    spec.seed = rng();
    const Game g = gen_random_game(spec);
    const std::size_t n = g.player_count();
    Profile p = Profile::from_mask(n, rng() & ((1ULL << n) - 1));

    bool all_nonpositive = true;
    Rational sum = 0;
    for (Player v = 0; v < n; ++v) {
      all_nonpositive = all_nonpositive && deviation_gain(g, p, v) <= 0;
      sum += payoff(g, p, v);
    }
    EXPECT_EQ(is_psne(g, p), all_nonpositive);
    EXPECT_EQ(usw(g, p), sum);

    const Player u = static_cast<Player>(rng() % n);
    std::vector<Rational> before(n);
    for (Player v = 0; v < n; ++v) before[v] = payoff(g, p, v);
    Profile flipped = p;
    flipped.flip(u);
    for (Player v = 0; v < n; ++v) {
      if (v != u && !g.graph().adjacent(u, v)) EXPECT_EQ(payoff(g, flipped, v), before[v]);
    }
    EXPECT_EQ(payoff(g, flipped, u) - before[u], deviation_gain(g, p, u));
    flipped.flip(u);
    for (Player v = 0; v < n; ++v) EXPECT_EQ(payoff(g, flipped, v), before[v]);
  }
}
