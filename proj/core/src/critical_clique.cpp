#include "bnpg/critical_clique.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace bnpg {
namespace {

struct NeighbourhoodHash {
  std::size_t operator()(const std::vector<Player>& list) const noexcept {
    std::size_t h = list.size();
    for (Player v : list) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

std::vector<Player> closed_neighbourhood(const Graph& graph, Player v) {
  const auto open = graph.neighbors(v);
  std::vector<Player> out(open.begin(), open.end());
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Graph CriticalCliqueGraph::quotient() const {
  std::vector<Edge> edges;
  edges.reserve(cc_edges.size());
  for (auto [a, b] : cc_edges) edges.push_back({static_cast<Player>(a), static_cast<Player>(b)});
  return Graph(cliques.size(), edges);
}

Graph CriticalCliqueGraph::expand() const {
  std::vector<Edge> edges;
  for (const auto& clique : cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) edges.push_back({clique[i], clique[j]});
    }
  }
  for (auto [a, b] : cc_edges) {
    for (Player u : cliques[a]) {
      for (Player v : cliques[b]) edges.push_back({u, v});
    }
  }
  return Graph(membership.size(), edges);
}

CriticalCliqueGraph build_cc_graph(const Graph& graph) {
  const std::size_t n = graph.player_count();
  CriticalCliqueGraph cc;
  cc.membership.assign(n, 0);
  // The key comparison is the full sorted list, so hash collisions can only
  // cost time, never merge distinct classes.
  std::unordered_map<std::vector<Player>, std::size_t, NeighbourhoodHash> classes;
  for (Player v = 0; v < n; ++v) {
    auto [it, inserted] = classes.try_emplace(closed_neighbourhood(graph, v), cc.cliques.size());
    if (inserted) cc.cliques.emplace_back();
    cc.cliques[it->second].push_back(v);
    cc.membership[v] = it->second;
  }
  for (const Edge& e : graph.edges()) {
    const std::size_t a = cc.membership[e.u];
    const std::size_t b = cc.membership[e.v];
    if (a != b) cc.cc_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(cc.cc_edges.begin(), cc.cc_edges.end());
  cc.cc_edges.erase(std::unique(cc.cc_edges.begin(), cc.cc_edges.end()), cc.cc_edges.end());
  return cc;
}

bool is_forest(const CriticalCliqueGraph& cc) {
  DisjointSets sets(cc.clique_count());
  for (auto [a, b] : cc.cc_edges) {
    if (!sets.unite(a, b)) return false;
  }
  return true;
}

RootedCliqueForest rooted_forest(const CriticalCliqueGraph& cc) {
  if (!is_forest(cc)) throw std::invalid_argument("critical clique graph is not a forest");
  const std::size_t k = cc.clique_count();
  const Graph tree = cc.quotient();

  RootedCliqueForest forest;
  forest.parent.assign(k, std::nullopt);
  forest.children.assign(k, {});
  std::vector<char> seen(k, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next neighbour slot)
  for (std::size_t root = 0; root < k; ++root) {
    if (seen[root]) continue;
    forest.roots.push_back(root);
    seen[root] = 1;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [node, slot] = stack.back();
      const auto nbrs = tree.neighbors(static_cast<Player>(node));
      if (slot == nbrs.size()) {
        forest.post_order.push_back(node);
        stack.pop_back();
        continue;
      }
      const std::size_t next = nbrs[slot++];
      if (seen[next]) continue;
      seen[next] = 1;
      forest.parent[next] = node;
      forest.children[node].push_back(next);
      stack.emplace_back(next, 0);
    }
  }
  return forest;
}

}  // namespace bnpg
