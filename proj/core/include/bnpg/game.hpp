#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bnpg/graph.hpp"
#include "bnpg/rational.hpp"

namespace bnpg {

// Binary networked public goods game: a network, one externality table per
// player and one investment cost per player.
//
// externality(v, k) is g_v(k), the benefit v receives when exactly k players
// of its closed neighbourhood N[v] invest (v itself included), so each table
// has closed_degree(v) + 1 = degree(v) + 2 entries. All values are >= 0.
class Game {
 public:
  Game() = default;
  Game(Graph graph, std::vector<std::vector<Rational>> externality,
       std::vector<Rational> cost);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t player_count() const noexcept { return graph_.player_count(); }

  const Rational& externality(Player v, std::size_t investors) const;
  std::span<const Rational> externality_table(Player v) const;
  const Rational& cost(Player v) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  Graph graph_;
  std::vector<std::vector<Rational>> externality_;
  std::vector<Rational> cost_;
};

// The set of investing players.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t player_count) : investing_(player_count, false) {}

  static Profile from_players(std::size_t player_count, std::span<const Player> investors);
  // Bit i of `mask` is player i.
  static Profile from_mask(std::size_t player_count, std::uint64_t mask);

  std::size_t player_count() const noexcept { return investing_.size(); }
  bool invests(Player v) const { return investing_.at(v); }
  void set(Player v, bool invest) { investing_.at(v) = invest; }
  void flip(Player v) { investing_.at(v) = !investing_.at(v); }

  std::size_t investor_count() const;
  std::vector<Player> investors() const;
  bool empty() const { return investor_count() == 0; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<bool> investing_;
};

// |N[v] ∩ s|: investing players in v's closed neighbourhood.
std::size_t closed_investors(const Graph& graph, const Profile& profile, Player v);

// Payoff of v when it takes action `invests` and `count` members of N[v]
// (itself included) invest. Throws std::out_of_range for counts beyond the
// table.
Rational payoff_at(const Game& game, Player v, bool invests, std::size_t count);

Rational payoff(const Game& game, const Profile& profile, Player v);

// payoff(s with v flipped) - payoff(s). Positive iff v strictly wants to
// deviate.
Rational deviation_gain(const Game& game, const Profile& profile, Player v);

// Indifference is not an incentive to deviate.
bool is_psne(const Game& game, const Profile& profile);

Rational usw(const Game& game, const Profile& profile);

// Throws std::invalid_argument for a game without players.
Rational esw(const Game& game, const Profile& profile);

// Every value a payoff can take: {g_v(k), g_v(k) - c(v)} over all players and
// counts, sorted and deduplicated. The optimum egalitarian welfare is one of
// them.
std::vector<Rational> attainable_payoffs(const Game& game);

// Induced subgame on a subset of players. `to_parent[i]` is the parent index
// of subgame player i (ascending); `from_parent[p]` is the subgame index of
// parent player p or kAbsent.
struct SubgameView {
  static constexpr Player kAbsent = static_cast<Player>(-1);

  Game game;
  std::vector<Player> to_parent;
  std::vector<Player> from_parent;

  Profile restrict(const Profile& parent_profile) const;
  Profile lift(const Profile& sub_profile) const;
};

SubgameView induce_subgame(const Game& game, std::span<const Player> subset);

}  // namespace bnpg
