#pragma once

#include <cstddef>

#include "bnpg/game.hpp"
#include "bnpg/solve_report.hpp"
#include "bnpg/tree_decomposition.hpp"

// Dynamic programs over a nice tree decomposition. A table entry at node i is
// keyed by (U, f): which bag members invest, and for each bag member v how
// many of its neighbours in G_i - B_i invest. A vertex's full closed-
// neighbourhood investor count is known exactly when it is forgotten, so its
// stability / payoff / threshold test is applied once, at that transition.
namespace bnpg::treewidth {

// No strict gain from flipping, for a player taking action `invests` with
// `count` investors in its closed neighbourhood (itself included).
bool stable(const Game& game, Player v, bool invests, std::size_t count);

// All three throw std::invalid_argument when `ntd` is not a valid nice
// decomposition of the game's network.
SolveReport solve_psne(const Game& game, const NiceTreeDecomposition& ntd);
SolveReport solve_usw(const Game& game, const NiceTreeDecomposition& ntd);
// Also throws for a game without players.
SolveReport solve_esw(const Game& game, const NiceTreeDecomposition& ntd);

// Same, on a min-fill decomposition of the network.
SolveReport solve_psne(const Game& game);
SolveReport solve_usw(const Game& game);
SolveReport solve_esw(const Game& game);

}  // namespace bnpg::treewidth
