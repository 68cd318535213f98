#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"

namespace bnpg {

// Which player stands for which object of the source instance. `source` is
// "vertex 3", "edge 0-2" or "special".
struct WitnessEntry {
  std::string source;
  Player player = 0;

  friend bool operator==(const WitnessEntry&, const WitnessEntry&) = default;
};

struct ReductionOutput {
  Game game;
  std::optional<Rational> threshold;
  std::vector<WitnessEntry> witness_map;
  std::vector<std::string> warnings;
};

// Fully homogeneous game on the same network: c = 2, g(x) = x for x <= 3 and
// x + 1 beyond. A player with exactly three investing neighbours is
// indifferent, so a nonempty PSNE exists iff some induced subgraph is
// 3-regular.
ReductionOutput reduce_3ris(const Graph& graph);

// Bipartite game with one player per vertex, one per edge and a special
// player v*. Throws std::invalid_argument for isolated vertices or kappa < 2.
// Warns when m <= kappa + kappa(kappa-1)/2: there the all-abstain profile
// already reaches the threshold, with or without a clique.
ReductionOutput reduce_clique_to_uswc(const Graph& graph, std::size_t kappa);

// Red and blue vertices keep their indices, v* comes last and is adjacent to
// every blue vertex. Threshold 1. Throws std::invalid_argument for isolated
// vertices, kappa < 1, or an edge inside one colour class.
ReductionOutput reduce_rbds_to_eswc(const RedBlueGraph& instance, std::size_t kappa);

}  // namespace bnpg
