#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/graph.hpp"

// Seeded instance generators. Output depends only on the spec (and the
// standard library's distributions).
namespace bnpg {

enum class Family { path, cycle, clique, tree, caterpillar, twin_expanded_tree, gnp, bounded_tw };

enum class ExternalityKind {
  monotone,     // nondecreasing in k
  arbitrary,    // independent draws
  homogeneous,  // one shared table and one shared cost
  zero,
};

enum class CostKind {
  unit,
  integer,   // 0 .. max_value
  rational,  // p/q with q in {1, 2, 3}
  zero,
};

struct GameSpec {
  Family family = Family::path;
  // Players; for twin_expanded_tree the number of tree nodes.
  std::size_t n = 5;
  // twin_expanded_tree: clique size per tree node. Drawn from 1..3 if empty.
  std::vector<std::size_t> multiplicities;
  double p = 0.5;         // gnp edge probability; bounded_tw edge survival
  std::size_t width = 2;  // bounded_tw
  ExternalityKind externality = ExternalityKind::monotone;
  CostKind cost = CostKind::unit;
  unsigned max_value = 4;
  std::uint64_t seed = 1;
};

// Throws std::invalid_argument for an infeasible spec (e.g. a cycle on two
// players, or multiplicities that disagree with n).
Graph gen_graph(const GameSpec& spec);
Game gen_random_game(const GameSpec& spec);

// Names as used on the command line ("twin-expanded-tree", "bounded-tw", ...).
// The parsers throw std::invalid_argument for unknown names.
std::string to_string(Family family);
Family parse_family(std::string_view name);
ExternalityKind parse_externality_kind(std::string_view name);
CostKind parse_cost_kind(std::string_view name);

}  // namespace bnpg
