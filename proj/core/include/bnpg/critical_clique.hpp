#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bnpg/graph.hpp"

namespace bnpg {

// Critical clique graph CC(G). Critical cliques are the closed-twin classes of
// G (players with identical closed neighbourhoods); they partition the
// players, and two classes are either completely adjacent or not at all.
struct CriticalCliqueGraph {
  // Ordered by smallest member; members ascending.
  std::vector<std::vector<Player>> cliques;
  // Pairs (a, b) with a < b, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cc_edges;
  // Clique index of every player.
  std::vector<std::size_t> membership;

  std::size_t clique_count() const noexcept { return cliques.size(); }
  // CC(G) itself, one vertex per clique.
  Graph quotient() const;
  // Replaces every node by its clique and joins adjacent cliques completely.
  Graph expand() const;
};

CriticalCliqueGraph build_cc_graph(const Graph& graph);

bool is_forest(const CriticalCliqueGraph& cc);

// CC(G) rooted per connected component at its lowest clique index; children
// ascending.
struct RootedCliqueForest {
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::size_t> roots;
  // Every clique after all of its descendants.
  std::vector<std::size_t> post_order;
};

// Throws std::invalid_argument when CC(G) has a cycle.
RootedCliqueForest rooted_forest(const CriticalCliqueGraph& cc);

}  // namespace bnpg
