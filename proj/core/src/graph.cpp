#include "bnpg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace bnpg {

Graph::Graph(std::size_t player_count) : adjacency_(player_count) {}

Graph::Graph(std::size_t player_count, std::span<const Edge> edges)
    : adjacency_(player_count) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= player_count || e.v >= player_count) {
      throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(e.u) +
                                  ", " + std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at player " + std::to_string(e.u));
    edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + ", " +
                                std::to_string(dup->v) + ")");
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const Player> Graph::neighbors(Player v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("player index " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

bool Graph::adjacent(Player u, Player v) const {
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Player> RedBlueGraph::red_vertices() const {
  std::vector<Player> out;
  for (Player v = 0; v < graph.player_count(); ++v) {
    if (red.at(v)) out.push_back(v);
  }
  return out;
}

std::vector<Player> RedBlueGraph::blue_vertices() const {
  std::vector<Player> out;
  for (Player v = 0; v < graph.player_count(); ++v) {
    if (!red.at(v)) out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> connected_components(const Graph& graph) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(graph.player_count(), kUnset);
  std::size_t next = 0;
  std::vector<Player> stack;
  for (Player s = 0; s < graph.player_count(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Player v = stack.back();
      stack.pop_back();
      for (Player w : graph.neighbors(v)) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool is_connected(const Graph& graph) {
  const auto comp = connected_components(graph);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool is_bipartite(const Graph& graph) {
  std::vector<int> side(graph.player_count(), -1);
  std::deque<Player> queue;
  for (Player s = 0; s < graph.player_count(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Player v = queue.front();
      queue.pop_front();
      for (Player w : graph.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::size_t diameter(const Graph& graph) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best = 0;
  std::vector<std::size_t> dist(graph.player_count());
  std::deque<Player> queue;
  for (Player s = 0; s < graph.player_count(); ++s) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Player v = queue.front();
      queue.pop_front();
      for (Player w : graph.neighbors(v)) {
        if (dist[w] == kInf) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
      }
    }
    for (auto d : dist) {
      if (d == kInf) return kInf;
      best = std::max(best, d);
    }
  }
  return best;
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({static_cast<Player>(i - 1), static_cast<Player>(i)});
  }
  return Graph(n, edges);
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<Player>(i), static_cast<Player>((i + 1) % n)});
  }
  return Graph(n, edges);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.push_back({static_cast<Player>(i), static_cast<Player>(j)});
    }
  }
  return Graph(n, edges);
}

Graph make_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<Player>(i)});
  return Graph(leaves + 1, edges);
}

Graph make_petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> edges;
  for (Player i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<Player>((i + 1) % 5)});
    edges.push_back({static_cast<Player>(5 + i), static_cast<Player>(5 + (i + 2) % 5)});
    edges.push_back({i, static_cast<Player>(5 + i)});
  }
  return Graph(10, edges);
}

}  // namespace bnpg
