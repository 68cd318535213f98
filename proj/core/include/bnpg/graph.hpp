#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bnpg {

using Player = std::uint32_t;

// Undirected edge, stored with u < v once it has been through a Graph.
struct Edge {
  Player u = 0;
  Player v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over players 0..n-1. Immutable once built; the
// constructor rejects self-loops, duplicate edges and out-of-range endpoints
// with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t player_count);
  Graph(std::size_t player_count, std::span<const Edge> edges);

  std::size_t player_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::size_t degree(Player v) const { return neighbors(v).size(); }
  std::size_t closed_degree(Player v) const { return degree(v) + 1; }

  // Sorted ascending.
  std::span<const Player> neighbors(Player v) const;
  bool adjacent(Player u, Player v) const;

  // Normalized (u < v) and sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Player>> adjacency_;
  std::vector<Edge> edges_;
};

// Bipartite instance for red-blue domination. Vertices not marked red are blue.
struct RedBlueGraph {
  Graph graph;
  std::vector<bool> red;

  bool is_red(Player v) const { return red.at(v); }
  std::vector<Player> red_vertices() const;
  std::vector<Player> blue_vertices() const;
};

// Component id per vertex, numbered in order of the smallest member.
std::vector<std::size_t> connected_components(const Graph& graph);
bool is_connected(const Graph& graph);
bool is_bipartite(const Graph& graph);
// Longest shortest-path distance; SIZE_MAX when the graph is disconnected.
std::size_t diameter(const Graph& graph);

Graph make_path(std::size_t n);
Graph make_cycle(std::size_t n);
Graph make_complete(std::size_t n);
Graph make_star(std::size_t leaves);
Graph make_petersen();

}  // namespace bnpg
