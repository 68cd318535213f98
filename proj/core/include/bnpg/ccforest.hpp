#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/solve_report.hpp"

// Polynomial dynamic programs for games whose critical clique graph is a
// forest. Each clique K keeps a table over (x, y, z): investors inside K, in
// the parent clique, and across all child cliques. Every member of K sees
// exactly x + y + z investors in its closed neighbourhood.
namespace bnpg::ccforest {

// Split of a clique at a fixed closed-neighbourhood investor total:
// members that cannot invest, members that must invest, and the rest.
struct CliqueClassification {
  std::vector<Player> must_abstain;  // investing would be a strict loss
  std::vector<Player> must_invest;   // abstaining would be a strict loss
  std::vector<Player> free;
  // Some member is in both groups above; no profile fits this total.
  bool contradiction = false;
  // `total` exceeds a member's closed degree; the key is infeasible.
  bool out_of_range = false;
};

CliqueClassification classify_clique_members(const Game& game, std::span<const Player> clique,
                                             std::size_t total);

SolveReport solve_psne(const Game& game);
SolveReport solve_usw(const Game& game);
// Throws std::invalid_argument for a game without players.
SolveReport solve_esw(const Game& game);

}  // namespace bnpg::ccforest
