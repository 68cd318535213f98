#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bnpg/game.hpp"
#include "bnpg/rational.hpp"

namespace bnpg {

enum class SolveStatus {
  solved,          // profile (and value, for welfare problems) found
  no_psne,         // the game has no pure equilibrium
  not_applicable,  // the network is outside the solver's class
};

struct SolveStats {
  double elapsed_ms = 0.0;
  // Table entries materialized across all DP nodes and passes.
  std::size_t table_entries = 0;
  // Largest single-node table.
  std::size_t peak_node_entries = 0;
  // Number of DP passes (ESW runs one per threshold probe).
  std::size_t passes = 0;
  // Entries per node in the final pass, when the solver tracks them.
  std::vector<std::size_t> node_entries;
};

struct SolveReport {
  SolveStatus status = SolveStatus::not_applicable;
  std::optional<Profile> profile;
  std::optional<Rational> value;
  std::string algorithm;
  std::string message;
  SolveStats stats;
};

std::string to_string(SolveStatus status);

}  // namespace bnpg
