#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bnpg/game.hpp"

// Exhaustive solvers over all 2^n profiles. These are the ground truth the
// dynamic programs and reductions are checked against, so they stay naive:
// plain enumeration, no pruning.
namespace bnpg::oracle {

struct OracleLimits {
  std::size_t max_players = 20;
  std::optional<std::chrono::milliseconds> time_budget;
};

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All PSNE in increasing order of the investing-set bitmask (bit i = player i).
std::vector<Profile> enum_psne(const Game& game, const OracleLimits& limits = {});

struct WelfareOptimum {
  Profile profile;
  Rational value;
};

// Among maximizers, the profile with the smallest bitmask.
WelfareOptimum max_usw(const Game& game, const OracleLimits& limits = {});
WelfareOptimum max_esw(const Game& game, const OracleLimits& limits = {});

// Smallest-bitmask nonempty H with G[H] 3-regular.
std::optional<std::vector<Player>> find_3regular_induced(const Graph& graph,
                                                         const OracleLimits& limits = {});
std::optional<std::vector<Player>> find_clique(const Graph& graph, std::size_t k,
                                               const OracleLimits& limits = {});
// Some B' among the blue vertices, |B'| <= k, adjacent to every red vertex.
std::optional<std::vector<Player>> find_rb_dominating(const RedBlueGraph& instance,
                                                      std::size_t k,
                                                      const OracleLimits& limits = {});

}  // namespace bnpg::oracle
