#include "graph_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace bnpg::testing {
namespace {

// Colour refinement: start from degrees, split by the multiset of neighbour
// colours until stable. Colours are ranks of signatures, so they are
// isomorphism-invariant.
std::vector<std::size_t> refine(const Graph& graph) {
  const std::size_t n = graph.player_count();
  std::vector<std::size_t> colour(n);
  for (Player v = 0; v < n; ++v) colour[v] = graph.degree(v);
  for (;;) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Player v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Player w : graph.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> next(n);
    for (Player v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const auto classes = [](const std::vector<std::size_t>& c) {
      return std::set<std::size_t>(c.begin(), c.end()).size();
    };
    const bool stable = classes(next) == classes(colour);
    colour = std::move(next);
    if (stable) return colour;
  }
}

std::uint64_t code_for(const Graph& graph, const std::vector<Player>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      code = (code << 1) | (graph.adjacent(order[i], order[j]) ? 1U : 0U);
    }
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Graph& graph) {
  const std::size_t n = graph.player_count();
  if (n > 10) throw std::invalid_argument("canonical_code supports at most 10 vertices");
  const auto colour = refine(graph);
  std::vector<Player> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Player a, Player b) { return std::pair(colour[a], a) < std::pair(colour[b], b); });

  // Cells of equal colour are permuted independently; the code is the
  // maximum over the product of cell permutations.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  bool first = true;
  auto recurse = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      const auto code = code_for(graph, order);
      if (first || code > best) best = code;
      first = false;
      return;
    }
    const auto [lo, hi] = cells[cell];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo),
              order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      self(self, cell + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  recurse(recurse, 0);
  // Prefix the vertex count so graphs of different orders never collide.
  return best | (static_cast<std::uint64_t>(n) << 56);
}

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  std::vector<Graph> level{Graph(0)};
  for (std::size_t size = 1; size <= n; ++size) {
    std::map<std::uint64_t, Graph> seen;
    for (const Graph& base : level) {
      const auto old_edges = base.edges();
      for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << (size - 1)); ++nbrs) {
        std::vector<Edge> edges = old_edges;
        for (Player w = 0; w + 1 < size; ++w) {
          if ((nbrs >> w) & 1U) edges.push_back({w, static_cast<Player>(size - 1)});
        }
        Graph g(size, edges);
        seen.try_emplace(canonical_code(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [code, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : nonisomorphic_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

bool has_isolated_vertex(const Graph& graph) {
  for (Player v = 0; v < graph.player_count(); ++v) {
    if (graph.degree(v) == 0) return true;
  }
  return false;
}

TreeDecomposition shuffled_decomposition(const Graph& graph, std::uint64_t seed) {
  std::vector<Player> order(graph.player_count());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return elimination_decomposition(graph, order);
}

}  // namespace bnpg::testing
