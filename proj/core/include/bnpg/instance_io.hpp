#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"
#include "bnpg/reductions.hpp"

// Text formats. All readers throw ParseError with the offending line.
//
// Instances ("bnpg 1"):
//   bnpg 1
//   n <player_count>
//   e <u> <v>
//   c <v> <cost>
//   g <v> <k> <value>
// '#' starts a comment. Every player needs a cost line and a full g table
// (k = 0 .. deg(v) + 1); nothing is defaulted. Values are integers,
// decimals or p/q.
//
// Profiles: "profile: 0 2", or "profile: -" when nobody invests.
//
// Plain graphs, the input of `reduce`:
//   n <vertex_count>
//   e <u> <v>
//   red <v>        (marks v red; unmarked vertices are blue)
namespace bnpg {

Game parse_instance(std::string_view text);

// Canonical form: edges sorted, then costs by player, then g lines by (v, k).
// Each comment becomes a "# ..." line above the header.
std::string serialize_instance(const Game& game, std::span<const std::string> comments = {});

// Indices must be below `player_count` and may not repeat.
Profile parse_profile(std::string_view text, std::size_t player_count);
std::string serialize_profile(const Profile& profile);

RedBlueGraph parse_graph(std::string_view text);
std::string serialize_graph(const RedBlueGraph& instance);

// The game, preceded by comments for threshold, warnings and witness map.
std::string serialize_reduction(const ReductionOutput& reduction);

}  // namespace bnpg
