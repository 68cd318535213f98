#pragma once

#include <initializer_list>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"

namespace bnpg::testing {

inline Graph graph_of(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph(n, std::vector<Edge>(edges));
}

inline std::vector<Rational> row(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

// Every player gets the prefix of `g` its closed degree needs, and cost `c`.
inline Game homogeneous(const Graph& graph, const std::vector<Rational>& g, const Rational& c) {
  std::vector<std::vector<Rational>> tables(graph.player_count());
  for (Player v = 0; v < graph.player_count(); ++v) {
    tables[v].assign(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(graph.closed_degree(v) + 1));
  }
  return Game(graph, tables, std::vector<Rational>(graph.player_count(), c));
}

inline Game single_player(std::initializer_list<long> g, long c) {
  return Game(Graph(1), {row(g)}, {Rational(c)});
}

inline Profile profile_of(std::size_t n, std::initializer_list<Player> investors) {
  return Profile::from_players(n, std::vector<Player>(investors));
}

}  // namespace bnpg::testing
