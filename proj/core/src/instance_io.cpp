#include "bnpg/instance_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bnpg/parse_error.hpp"
#include "text_util.hpp"

namespace bnpg {
namespace {

using detail::number;
using detail::split;

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

void expect_arity(const std::vector<std::string_view>& tokens, std::size_t arity,
                  std::size_t line, const char* usage) {
  if (tokens.size() != arity) throw ParseError(line, std::string("expected '") + usage + "'");
}

Player player(std::string_view token, std::size_t n, std::size_t line) {
  const std::size_t v = number(token, line);
  if (v >= n) {
    throw ParseError(line, "player " + std::to_string(v) + " out of range [0, " +
                               std::to_string(n) + ")");
  }
  return static_cast<Player>(v);
}

Rational value(std::string_view token, std::size_t line) {
  Rational r;
  try {
    r = parse_rational(token);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
  if (r < 0) throw ParseError(line, "negative value " + std::string(token));
  return r;
}

void read_edge(const std::vector<std::string_view>& tokens, std::size_t n,
               std::size_t line, std::vector<Edge>& edges) {
  expect_arity(tokens, 3, line, "e <u> <v>");
  const Player u = player(tokens[1], n, line);
  const Player v = player(tokens[2], n, line);
  if (u == v) throw ParseError(line, "self-loop at player " + std::to_string(u));
  const Edge e{std::min(u, v), std::max(u, v)};
  if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
    throw ParseError(line, "duplicate edge (" + std::to_string(e.u) + ", " +
                               std::to_string(e.v) + ")");
  }
  edges.push_back(e);
}

}  // namespace

Game parse_instance(std::string_view text) {
  bool have_header = false;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<std::optional<Rational>> cost;
  struct Entry {
    Player v;
    std::size_t k;
    Rational value;
    std::size_t line;
  };
  std::vector<Entry> entries;

  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto tokens = split(strip_comment(raw));
    if (tokens.empty()) return;
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "bnpg" || tokens[1] != "1") {
        throw ParseError(line, "bad header, expected 'bnpg 1'");
      }
      have_header = true;
      return;
    }
    const std::string_view kind = tokens[0];
    if (kind == "n") {
      if (n) throw ParseError(line, "duplicate player count");
      expect_arity(tokens, 2, line, "n <player_count>");
      n = number(tokens[1], line);
      cost.assign(*n, std::nullopt);
      return;
    }
    if (kind != "e" && kind != "c" && kind != "g") {
      throw ParseError(line, "unknown line kind '" + std::string(kind) + "'");
    }
    if (!n) throw ParseError(line, "player count must precede '" + std::string(kind) + "' lines");
    if (kind == "e") {
      read_edge(tokens, *n, line, edges);
    } else if (kind == "c") {
      expect_arity(tokens, 3, line, "c <v> <cost>");
      const Player v = player(tokens[1], *n, line);
      if (cost[v]) throw ParseError(line, "duplicate cost for player " + std::to_string(v));
      cost[v] = value(tokens[2], line);
    } else {
      expect_arity(tokens, 4, line, "g <v> <k> <value>");
      entries.push_back({player(tokens[1], *n, line), number(tokens[2], line),
                         value(tokens[3], line), line});
    }
  });
  if (!have_header) throw ParseError(0, "bad header, expected 'bnpg 1'");
  if (!n) throw ParseError(0, "missing player count");

  Graph graph(*n, edges);
  std::vector<std::vector<std::optional<Rational>>> table(*n);
  for (Player v = 0; v < *n; ++v) table[v].assign(graph.closed_degree(v) + 1, std::nullopt);
  for (auto& entry : entries) {
    auto& row = table[entry.v];
    if (entry.k >= row.size()) {
      throw ParseError(entry.line, "k = " + std::to_string(entry.k) + " out of range [0, " +
                                       std::to_string(row.size() - 1) + "] for player " +
                                       std::to_string(entry.v));
    }
    if (row[entry.k]) {
      throw ParseError(entry.line, "duplicate g entry for player " + std::to_string(entry.v) +
                                       " at k = " + std::to_string(entry.k));
    }
    row[entry.k] = std::move(entry.value);
  }

  std::vector<std::vector<Rational>> g(*n);
  std::vector<Rational> c(*n);
  for (Player v = 0; v < *n; ++v) {
    if (!cost[v]) throw ParseError(0, "missing cost for player " + std::to_string(v));
    c[v] = *cost[v];
    for (auto& cell : table[v]) {
      if (!cell) {
        throw ParseError(0, "incomplete externality table for player " + std::to_string(v));
      }
      g[v].push_back(std::move(*cell));
    }
  }
  return Game(std::move(graph), std::move(g), std::move(c));
}

std::string serialize_instance(const Game& game, std::span<const std::string> comments) {
  std::ostringstream out;
  for (const auto& comment : comments) out << "# " << comment << '\n';
  out << "bnpg 1\n";
  out << "n " << game.player_count() << '\n';
  for (const Edge& e : game.graph().edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (Player v = 0; v < game.player_count(); ++v) {
    out << "c " << v << ' ' << to_string(game.cost(v)) << '\n';
  }
  for (Player v = 0; v < game.player_count(); ++v) {
    const auto row = game.externality_table(v);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << "g " << v << ' ' << k << ' ' << to_string(row[k]) << '\n';
    }
  }
  return out.str();
}

Profile parse_profile(std::string_view text, std::size_t player_count) {
  std::optional<Profile> result;
  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto tokens = split(strip_comment(raw));
    if (tokens.empty()) return;
    if (result) throw ParseError(line, "more than one profile line");
    if (tokens[0] != "profile:") throw ParseError(line, "expected 'profile:'");
    Profile profile(player_count);
    if (tokens.size() == 2 && tokens[1] == "-") {
      result = profile;
      return;
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const Player v = player(tokens[i], player_count, line);
      if (profile.invests(v)) throw ParseError(line, "player " + std::to_string(v) + " repeated");
      profile.set(v, true);
    }
    result = profile;
  });
  if (!result) throw ParseError(0, "no profile line");
  return *result;
}

std::string serialize_profile(const Profile& profile) {
  const auto investors = profile.investors();
  if (investors.empty()) return "profile: -";
  std::string out = "profile:";
  for (Player v : investors) out += " " + std::to_string(v);
  return out;
}

RedBlueGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<bool> red;
  detail::for_each_line(text, [&](std::size_t line, std::string_view raw) {
    const auto tokens = split(strip_comment(raw));
    if (tokens.empty()) return;
    const std::string_view kind = tokens[0];
    if (kind == "n") {
      if (n) throw ParseError(line, "duplicate vertex count");
      expect_arity(tokens, 2, line, "n <vertex_count>");
      n = number(tokens[1], line);
      red.assign(*n, false);
      return;
    }
    if (kind != "e" && kind != "red") {
      throw ParseError(line, "unknown line kind '" + std::string(kind) + "'");
    }
    if (!n) throw ParseError(line, "vertex count must come first");
    if (kind == "e") {
      read_edge(tokens, *n, line, edges);
    } else {
      expect_arity(tokens, 2, line, "red <v>");
      red[player(tokens[1], *n, line)] = true;
    }
  });
  if (!n) throw ParseError(0, "missing vertex count");
  return {Graph(*n, edges), std::move(red)};
}

std::string serialize_graph(const RedBlueGraph& instance) {
  std::ostringstream out;
  out << "n " << instance.graph.player_count() << '\n';
  for (const Edge& e : instance.graph.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (Player v = 0; v < instance.red.size(); ++v) {
    if (instance.red[v]) out << "red " << v << '\n';
  }
  return out.str();
}

std::string serialize_reduction(const ReductionOutput& reduction) {
  std::vector<std::string> comments;
  if (reduction.threshold) comments.push_back("threshold " + to_string(*reduction.threshold));
  for (const auto& w : reduction.warnings) comments.push_back("warning: " + w);
  for (const auto& w : reduction.witness_map) {
    comments.push_back("witness " + w.source + " -> " + std::to_string(w.player));
  }
  return serialize_instance(reduction.game, comments);
}

}  // namespace bnpg
