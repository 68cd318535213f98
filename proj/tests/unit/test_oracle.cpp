#include <gtest/gtest.h>

#include <random>

#include "bnpg/generators.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/reductions.hpp"
#include "helpers.hpp"

using namespace bnpg;
using namespace bnpg::testing;

TEST(EnumPsne, SinglePlayer) {
  const auto strict = oracle::enum_psne(single_player({0, 2}, 1));
  ASSERT_EQ(strict.size(), 1U);
  EXPECT_TRUE(strict[0].invests(0));

  const auto tie = oracle::enum_psne(single_player({0, 2}, 2));
  ASSERT_EQ(tie.size(), 2U);
  EXPECT_TRUE(tie[0].empty());
  EXPECT_TRUE(tie[1].invests(0));
}

TEST(EnumPsne, TriangleHasOnlyEmpty) {
  const auto all = oracle::enum_psne(reduce_3ris(make_complete(3)).game);
  ASSERT_EQ(all.size(), 1U);
  EXPECT_TRUE(all[0].empty());
}

TEST(EnumPsne, ExactlyTheEquilibria) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 40; ++round) {
    GameSpec spec;
    spec.family = Family::gnp;
    spec.n = 1 + rng() % 8;
    spec.externality = ExternalityKind::arbitrary;
    spec.cost = CostKind::integer;
    spec.seed = rng();
    const Game g = gen_random_game(spec);
    const auto found = oracle::enum_psne(g);
    std::size_t next = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << spec.n); ++mask) {
      const Profile p = Profile::from_mask(spec.n, mask);
      const bool listed = next < found.size() && found[next] == p;
      EXPECT_EQ(listed, is_psne(g, p));
      if (listed) ++next;
    }
    EXPECT_EQ(next, found.size());
  }
}

TEST(MaxUsw, Examples) {
  const Game zero = homogeneous(make_path(3), row({0, 0, 0, 0}), Rational(1));
  const auto none = oracle::max_usw(zero);
  EXPECT_TRUE(none.profile.empty());
  EXPECT_EQ(none.value, 0);

  const auto one = oracle::max_usw(single_player({0, 2}, 1));
  EXPECT_TRUE(one.profile.invests(0));
  EXPECT_EQ(one.value, 1);
}

TEST(MaxUsw, DominatesRandomProfiles) {
  std::mt19937_64 rng(9);
  GameSpec spec;
  spec.family = Family::gnp;
  spec.n = 9;
  spec.externality = ExternalityKind::arbitrary;
  spec.cost = CostKind::rational;
  spec.seed = 3;
  const Game g = gen_random_game(spec);
  const auto best = oracle::max_usw(g);
  EXPECT_EQ(usw(g, best.profile), best.value);
  for (int i = 0; i < 200; ++i) {
    EXPECT_LE(usw(g, Profile::from_mask(9, rng() & 0x1FF)), best.value);
  }
}

TEST(MaxEsw, Examples) {
  const RedBlueGraph rb{graph_of(2, {{0, 1}}), {true, false}};
  EXPECT_EQ(oracle::max_esw(reduce_rbds_to_eswc(rb, 1).game).value, 1);

  const auto flat = oracle::max_esw(single_player({0, 0}, 1));
  EXPECT_TRUE(flat.profile.empty());
  EXPECT_EQ(flat.value, 0);
}

TEST(Limits, RefusesLargeGames) {
  const Game g = homogeneous(make_path(21), row({0, 0, 0, 0}), Rational(1));
  EXPECT_THROW(oracle::enum_psne(g), oracle::LimitExceeded);
  EXPECT_THROW(oracle::max_usw(g, {.max_players = 5, .time_budget = {}}), oracle::LimitExceeded);
  EXPECT_THROW(oracle::max_esw(g, {.max_players = 0, .time_budget = {}}), std::invalid_argument);
}

TEST(Limits, TimeBudget) {
  const Game g = homogeneous(make_path(26), row({0, 1, 2, 3}), Rational(1));
  const oracle::OracleLimits limits{.max_players = 30,
                                    .time_budget = std::chrono::milliseconds(1)};
  EXPECT_THROW(oracle::max_usw(g, limits), oracle::LimitExceeded);
}

TEST(Find, ThreeRegular) {
  EXPECT_EQ(oracle::find_3regular_induced(make_petersen())->size(), 10U);
  EXPECT_EQ(oracle::find_3regular_induced(make_complete(4))->size(), 4U);
  EXPECT_FALSE(oracle::find_3regular_induced(make_complete(3)));
}

TEST(Find, Clique) {
  EXPECT_TRUE(oracle::find_clique(make_complete(3), 3));
  EXPECT_FALSE(oracle::find_clique(make_cycle(5), 3));
  EXPECT_TRUE(oracle::find_clique(make_cycle(5), 2));
}

TEST(Find, RedBlueDomination) {
  const RedBlueGraph star{make_star(3), {false, true, true, true}};
  const auto chosen = oracle::find_rb_dominating(star, 1);
  ASSERT_TRUE(chosen);
  EXPECT_EQ(*chosen, std::vector<Player>{0});

  const RedBlueGraph pairs{graph_of(4, {{0, 2}, {1, 3}}), {true, true, false, false}};
  EXPECT_FALSE(oracle::find_rb_dominating(pairs, 1));
  EXPECT_TRUE(oracle::find_rb_dominating(pairs, 2));
}
