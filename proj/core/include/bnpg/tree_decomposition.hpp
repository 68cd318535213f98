#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bnpg/graph.hpp"

namespace bnpg {

struct TreeDecomposition {
  std::size_t vertex_count = 0;
  // Each bag sorted ascending.
  std::vector<std::vector<Player>> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;

  // Largest bag size minus one; 0 when there are no non-empty bags.
  std::size_t width() const;
};

enum class Axiom {
  structure,     // bag indices, vertex ranges, the bag graph being a tree
  cover,         // every vertex is in some bag
  edge,          // every edge is inside some bag
  connectivity,  // the bags holding a vertex form a subtree
  nice_form,     // node kinds of a nice decomposition
};

std::string to_string(Axiom axiom);

// First violated axiom, checked in the enum's order, with a witness.
struct ValidationResult {
  bool ok = true;
  Axiom axiom = Axiom::structure;
  std::string message;
  std::optional<Player> vertex;
  std::optional<Edge> edge;
  std::optional<std::size_t> bag;

  explicit operator bool() const noexcept { return ok; }
};

ValidationResult validate(const TreeDecomposition& td, const Graph& graph);

// Decomposition induced by eliminating vertices in `order` (a permutation).
// Bag of v = v plus its neighbours still present when v is eliminated.
TreeDecomposition elimination_decomposition(const Graph& graph, std::span<const Player> order);

// Greedy minimum-fill ordering; ties by smaller degree, then smaller index.
std::vector<Player> min_fill_order(const Graph& graph);

TreeDecomposition heuristic_decomposition(const Graph& graph);

enum class NiceKind { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  std::vector<Player> bag;  // sorted
  Player vertex = 0;        // introduced / forgotten vertex
  std::vector<std::size_t> children;
};

// Rooted nice decomposition. Children always precede their parent in
// `nodes`, so a forward pass is a valid bottom-up order.
struct NiceTreeDecomposition {
  std::size_t vertex_count = 0;
  std::vector<NiceNode> nodes;
  std::size_t root = 0;

  std::size_t width() const;
  TreeDecomposition as_tree_decomposition() const;
};

// Throws std::invalid_argument if `td` does not validate against `graph`.
NiceTreeDecomposition to_nice(const TreeDecomposition& td, const Graph& graph);

ValidationResult validate_nice(const NiceTreeDecomposition& ntd, const Graph& graph);

// PACE 2017 .td text. Vertices are 1-indexed in the file and 0-indexed in
// memory. Throws ParseError naming the offending line.
TreeDecomposition read_pace(std::string_view text);
std::string write_pace(const TreeDecomposition& td);

}  // namespace bnpg
