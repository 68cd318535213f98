#include "bnpg/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bnpg {
namespace {

void check_player(const Game& game, Player v) {
  if (v >= game.player_count()) {
    throw std::out_of_range("player index " + std::to_string(v) + " out of range");
  }
}

void check_profile(const Game& game, const Profile& profile) {
  if (profile.player_count() != game.player_count()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.player_count()) +
                                " players, game has " + std::to_string(game.player_count()));
  }
}

}  // namespace

Game::Game(Graph graph, std::vector<std::vector<Rational>> externality,
           std::vector<Rational> cost)
    : graph_(std::move(graph)), externality_(std::move(externality)), cost_(std::move(cost)) {
  const std::size_t n = graph_.player_count();
  if (externality_.size() != n || cost_.size() != n) {
    throw std::invalid_argument("externality and cost tables must cover every player");
  }
  for (Player v = 0; v < n; ++v) {
    if (externality_[v].size() != graph_.degree(v) + 2) {
      throw std::invalid_argument("externality table of player " + std::to_string(v) +
                                  " must have " + std::to_string(graph_.degree(v) + 2) +
                                  " entries");
    }
    for (const Rational& x : externality_[v]) {
      if (x < 0) {
        throw std::invalid_argument("negative externality value for player " +
                                    std::to_string(v));
      }
    }
    if (cost_[v] < 0) {
      throw std::invalid_argument("negative cost for player " + std::to_string(v));
    }
  }
}

const Rational& Game::externality(Player v, std::size_t investors) const {
  const auto table = externality_table(v);
  if (investors >= table.size()) {
    throw std::out_of_range("externality index " + std::to_string(investors) +
                            " out of range for player " + std::to_string(v));
  }
  return table[investors];
}

std::span<const Rational> Game::externality_table(Player v) const {
  if (v >= externality_.size()) {
    throw std::out_of_range("player index " + std::to_string(v) + " out of range");
  }
  return externality_[v];
}

const Rational& Game::cost(Player v) const {
  if (v >= cost_.size()) {
    throw std::out_of_range("player index " + std::to_string(v) + " out of range");
  }
  return cost_[v];
}

Profile Profile::from_players(std::size_t player_count, std::span<const Player> investors) {
  Profile p(player_count);
  for (Player v : investors) {
    if (v >= player_count) {
      throw std::out_of_range("player index " + std::to_string(v) + " out of range");
    }
    p.investing_[v] = true;
  }
  return p;
}

Profile Profile::from_mask(std::size_t player_count, std::uint64_t mask) {
  Profile p(player_count);
  for (std::size_t v = 0; v < player_count && v < 64; ++v) {
    p.investing_[v] = ((mask >> v) & 1U) != 0;
  }
  return p;
}

std::size_t Profile::investor_count() const {
  return static_cast<std::size_t>(std::count(investing_.begin(), investing_.end(), true));
}

std::vector<Player> Profile::investors() const {
  std::vector<Player> out;
  for (Player v = 0; v < investing_.size(); ++v) {
    if (investing_[v]) out.push_back(v);
  }
  return out;
}

std::size_t closed_investors(const Graph& graph, const Profile& profile, Player v) {
  std::size_t count = profile.invests(v) ? 1 : 0;
  for (Player w : graph.neighbors(v)) count += profile.invests(w) ? 1 : 0;
  return count;
}

Rational payoff_at(const Game& game, Player v, bool invests, std::size_t count) {
  Rational value = game.externality(v, count);
  if (invests) value -= game.cost(v);
  return value;
}

Rational payoff(const Game& game, const Profile& profile, Player v) {
  check_player(game, v);
  check_profile(game, profile);
  return payoff_at(game, v, profile.invests(v), closed_investors(game.graph(), profile, v));
}

Rational deviation_gain(const Game& game, const Profile& profile, Player v) {
  check_player(game, v);
  check_profile(game, profile);
  const bool invests = profile.invests(v);
  const std::size_t count = closed_investors(game.graph(), profile, v);
  const std::size_t flipped = invests ? count - 1 : count + 1;
  return payoff_at(game, v, !invests, flipped) - payoff_at(game, v, invests, count);
}

bool is_psne(const Game& game, const Profile& profile) {
  check_profile(game, profile);
  for (Player v = 0; v < game.player_count(); ++v) {
    if (deviation_gain(game, profile, v) > 0) return false;
  }
  return true;
}

Rational usw(const Game& game, const Profile& profile) {
  check_profile(game, profile);
  Rational total = 0;
  for (Player v = 0; v < game.player_count(); ++v) total += payoff(game, profile, v);
  return total;
}

Rational esw(const Game& game, const Profile& profile) {
  check_profile(game, profile);
  if (game.player_count() == 0) {
    throw std::invalid_argument("egalitarian welfare of a game without players");
  }
  Rational best = payoff(game, profile, 0);
  for (Player v = 1; v < game.player_count(); ++v) {
    Rational p = payoff(game, profile, v);
    if (p < best) best = std::move(p);
  }
  return best;
}

std::vector<Rational> attainable_payoffs(const Game& game) {
  std::vector<Rational> values;
  for (Player v = 0; v < game.player_count(); ++v) {
    for (const Rational& g : game.externality_table(v)) {
      values.push_back(g);
      values.push_back(g - game.cost(v));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Profile SubgameView::restrict(const Profile& parent_profile) const {
  Profile out(to_parent.size());
  for (Player i = 0; i < to_parent.size(); ++i) out.set(i, parent_profile.invests(to_parent[i]));
  return out;
}

Profile SubgameView::lift(const Profile& sub_profile) const {
  Profile out(from_parent.size());
  for (Player i = 0; i < to_parent.size(); ++i) out.set(to_parent[i], sub_profile.invests(i));
  return out;
}

SubgameView induce_subgame(const Game& game, std::span<const Player> subset) {
  const std::size_t n = game.player_count();
  SubgameView view;
  view.from_parent.assign(n, SubgameView::kAbsent);
  std::vector<Player> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("subgame subset contains a repeated player");
  }
  for (Player v : members) {
    if (v >= n) throw std::out_of_range("player index " + std::to_string(v) + " out of range");
    view.from_parent[v] = static_cast<Player>(view.to_parent.size());
    view.to_parent.push_back(v);
  }

  std::vector<Edge> edges;
  for (const Edge& e : game.graph().edges()) {
    const Player a = view.from_parent[e.u];
    const Player b = view.from_parent[e.v];
    if (a != SubgameView::kAbsent && b != SubgameView::kAbsent) edges.push_back({a, b});
  }
  Graph graph(members.size(), edges);

  std::vector<std::vector<Rational>> externality(members.size());
  std::vector<Rational> cost(members.size());
  for (Player i = 0; i < members.size(); ++i) {
    const auto table = game.externality_table(members[i]);
    externality[i].assign(table.begin(), table.begin() + graph.degree(i) + 2);
    cost[i] = game.cost(members[i]);
  }
  view.game = Game(std::move(graph), std::move(externality), std::move(cost));
  return view;
}

}  // namespace bnpg
