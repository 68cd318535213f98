#include <gtest/gtest.h>

#include <random>

#include "bnpg/ccforest.hpp"
#include "bnpg/generators.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/reductions.hpp"
#include "bnpg/treewidth.hpp"
#include "corpus.hpp"
#include "graph_enum.hpp"
#include "helpers.hpp"

using namespace bnpg;
using namespace bnpg::testing;

namespace {

NiceTreeDecomposition nice_of(const Graph& g) { return to_nice(heuristic_decomposition(g), g); }

}  // namespace

TEST(Stable, MatchesDeviationGain) {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 200; ++round) {
    GameSpec spec;
    spec.family = Family::gnp;
    spec.n = 1 + rng() % 7;
    spec.externality = ExternalityKind::arbitrary;
    spec.cost = CostKind::rational;
    spec.seed = rng();
    const Game g = gen_random_game(spec);
    const Profile p = Profile::from_mask(spec.n, rng() & ((1ULL << spec.n) - 1));
    for (Player v = 0; v < spec.n; ++v) {
      const bool ok = treewidth::stable(g, v, p.invests(v), closed_investors(g.graph(), p, v));
      EXPECT_EQ(ok, deviation_gain(g, p, v) <= 0);
    }
  }
}

TEST(TwPsne, Examples) {
  const Game p4 = homogeneous(make_path(4), row({0, 0, 0, 0}), Rational(1));
  const auto r = treewidth::solve_psne(p4, nice_of(p4.graph()));
  ASSERT_EQ(r.status, SolveStatus::solved);
  EXPECT_TRUE(r.profile->empty());

  const Game k4 = reduce_3ris(make_complete(4)).game;
  const auto nice = nice_of(k4.graph());
  EXPECT_EQ(nice.width(), 3U);
  EXPECT_EQ(treewidth::solve_psne(k4, nice).status, SolveStatus::solved);

  const Game k3 = reduce_3ris(make_complete(3)).game;
  const auto only = treewidth::solve_psne(k3);
  ASSERT_EQ(only.status, SolveStatus::solved);
  EXPECT_TRUE(only.profile->empty());
}

TEST(TwPsne, NoEquilibrium) {
  const Game g(make_path(2), {row({0, 0, 2}), row({0, 2, 0})}, {Rational(1), Rational(1)});
  EXPECT_EQ(treewidth::solve_psne(g).status, SolveStatus::no_psne);
}

TEST(TwPsne, RejectsForeignDecomposition) {
  const Game g = homogeneous(make_cycle(4), row({0, 1, 2, 3}), Rational(1));
  EXPECT_THROW(treewidth::solve_psne(g, nice_of(make_path(4))), std::invalid_argument);
}

TEST(TwUsw, Examples) {
  const Game edgeless = homogeneous(Graph(3), row({0, 1}), Rational(2));
  auto r = treewidth::solve_usw(edgeless);
  EXPECT_EQ(*r.value, 0);
  EXPECT_TRUE(r.profile->empty());

  const Game triangle = reduce_clique_to_uswc(make_complete(3), 3).game;
  EXPECT_EQ(*treewidth::solve_usw(triangle).value, oracle::max_usw(triangle).value);

  const Game p3(make_path(3), {row({0, 0, 0}), row({0, 3, 3, 3}), row({0, 0, 0})},
                {Rational(1), Rational(1), Rational(1)});
  EXPECT_EQ(*treewidth::solve_usw(p3).value, 2);
  EXPECT_EQ(*ccforest::solve_usw(p3).value, 2);
}

TEST(TwEsw, Examples) {
  EXPECT_EQ(*treewidth::solve_esw(single_player({0, 2}, 1)).value, 1);

  const RedBlueGraph star{make_star(2), {false, true, true}};
  const Game yes = reduce_rbds_to_eswc(star, 1).game;
  EXPECT_EQ(*treewidth::solve_esw(yes).value, 1);

  const RedBlueGraph pairs{graph_of(4, {{0, 2}, {1, 3}}), {true, true, false, false}};
  const Game no = reduce_rbds_to_eswc(pairs, 1).game;
  EXPECT_EQ(*treewidth::solve_esw(no).value, 0);
  EXPECT_EQ(oracle::max_esw(no).value, 0);
}

TEST(TwSolvers, MatchOracleOnCorpus) {
  for (const auto& spec : treewidth_specs(150, 91)) {
    const Game g = gen_random_game(spec);
    const auto nice = nice_of(g.graph());
    const auto p = treewidth::solve_psne(g, nice);
    EXPECT_EQ(p.status == SolveStatus::solved, !oracle::enum_psne(g).empty());
    if (p.profile) EXPECT_TRUE(is_psne(g, *p.profile));
    const auto u = treewidth::solve_usw(g, nice);
    EXPECT_EQ(*u.value, oracle::max_usw(g).value);
    EXPECT_EQ(usw(g, *u.profile), *u.value);
    const auto e = treewidth::solve_esw(g, nice);
    EXPECT_EQ(*e.value, oracle::max_esw(g).value);
    EXPECT_EQ(esw(g, *e.profile), *e.value);
  }
}

TEST(TwSolvers, DecompositionIndependence) {
  for (const auto& spec : treewidth_specs(60, 93)) {
    const Game g = gen_random_game(spec);
    const auto a = nice_of(g.graph());
    const auto b = to_nice(shuffled_decomposition(g.graph(), spec.seed), g.graph());
    EXPECT_EQ(treewidth::solve_psne(g, a).status, treewidth::solve_psne(g, b).status);
    EXPECT_EQ(*treewidth::solve_usw(g, a).value, *treewidth::solve_usw(g, b).value);
    EXPECT_EQ(*treewidth::solve_esw(g, a).value, *treewidth::solve_esw(g, b).value);
  }
}

// Keys at node i never exceed 2^|B_i| * prod over the bag of (n_i(v) + 1),
// where n_i(v) counts v's neighbours among vertices forgotten below i.
TEST(TwSolvers, StateCountBound) {
  for (const auto& spec : treewidth_specs(60, 95)) {
    const Game g = gen_random_game(spec);
    const auto nice = nice_of(g.graph());
    const auto report = treewidth::solve_usw(g, nice);
    ASSERT_EQ(report.stats.node_entries.size(), nice.nodes.size());

    std::vector<std::vector<char>> forgotten(nice.nodes.size(),
                                             std::vector<char>(g.player_count(), 0));
    for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
      const auto& node = nice.nodes[i];
      for (std::size_t c : node.children) {
        for (Player v = 0; v < g.player_count(); ++v) forgotten[i][v] |= forgotten[c][v];
      }
      if (node.kind == NiceKind::forget) forgotten[i][node.vertex] = 1;
      double bound = std::ldexp(1.0, static_cast<int>(node.bag.size()));
      for (Player v : node.bag) {
        std::size_t n_i = 0;
        for (Player w : g.graph().neighbors(v)) n_i += forgotten[i][w];
        bound *= static_cast<double>(n_i + 1);
      }
      EXPECT_LE(static_cast<double>(report.stats.node_entries[i]), bound);
    }
  }
}

TEST(TwSolvers, AgreeWithCcForestOnTrees) {
  for (const auto& spec : intersection_specs(60, 97)) {
    const Game g = gen_random_game(spec);
    EXPECT_EQ(treewidth::solve_psne(g).status, ccforest::solve_psne(g).status);
    EXPECT_EQ(*treewidth::solve_usw(g).value, *ccforest::solve_usw(g).value);
    EXPECT_EQ(*treewidth::solve_esw(g).value, *ccforest::solve_esw(g).value);
  }
}
