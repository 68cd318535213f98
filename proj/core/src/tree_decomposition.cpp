#include "bnpg/tree_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace bnpg {
namespace {

ValidationResult failure(Axiom axiom, std::string message) {
  ValidationResult r;
  r.ok = false;
  r.axiom = axiom;
  r.message = std::move(message);
  return r;
}

std::uint64_t edge_key(Player u, Player v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Mutable adjacency used while eliminating vertices.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& graph) : adj_(graph.player_count()) {
    for (Player v = 0; v < graph.player_count(); ++v) {
      const auto nbrs = graph.neighbors(v);
      adj_[v].assign(nbrs.begin(), nbrs.end());
    }
  }

  const std::vector<Player>& neighbors(Player v) const { return adj_[v]; }

  bool adjacent(Player u, Player v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::size_t fill_in(Player v) const {
    const auto& nbrs = adj_[v];
    std::size_t missing = 0;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!adjacent(nbrs[i], nbrs[j])) ++missing;
      }
    }
    return missing;
  }

  // Turns N(v) into a clique and removes v.
  void eliminate(Player v) {
    const std::vector<Player> nbrs = adj_[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        link(nbrs[i], nbrs[j]);
      }
    }
    for (Player w : nbrs) {
      auto& list = adj_[w];
      list.erase(std::lower_bound(list.begin(), list.end(), v));
    }
    adj_[v].clear();
  }

 private:
  void link(Player u, Player v) {
    auto it = std::lower_bound(adj_[u].begin(), adj_[u].end(), v);
    if (it != adj_[u].end() && *it == v) return;
    adj_[u].insert(it, v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  }

  std::vector<std::vector<Player>> adj_;
};

}  // namespace

std::size_t TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return largest == 0 ? 0 : largest - 1;
}

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::structure: return "structure";
    case Axiom::cover: return "cover";
    case Axiom::edge: return "edge";
    case Axiom::connectivity: return "connectivity";
    case Axiom::nice_form: return "nice_form";
  }
  return "unknown";
}

ValidationResult validate(const TreeDecomposition& td, const Graph& graph) {
  const std::size_t n = graph.player_count();
  const std::size_t b = td.bags.size();
  if (td.vertex_count != n) {
    return failure(Axiom::structure, "decomposition is for " + std::to_string(td.vertex_count) +
                                         " vertices, graph has " + std::to_string(n));
  }
  for (std::size_t i = 0; i < b; ++i) {
    const auto& bag = td.bags[i];
    for (std::size_t j = 0; j < bag.size(); ++j) {
      if (bag[j] >= n || (j > 0 && bag[j - 1] >= bag[j])) {
        auto r = failure(Axiom::structure,
                         "bag " + std::to_string(i) + " is not a sorted set of valid vertices");
        r.bag = i;
        return r;
      }
    }
  }
  if (b == 0 ? !td.tree_edges.empty() : td.tree_edges.size() != b - 1) {
    return failure(Axiom::structure, "a tree on " + std::to_string(b) + " bags needs " +
                                         std::to_string(b == 0 ? 0 : b - 1) + " edges");
  }
  {
    std::vector<std::size_t> parent(b);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (auto [x, y] : td.tree_edges) {
      if (x >= b || y >= b || x == y) {
        return failure(Axiom::structure, "tree edge (" + std::to_string(x) + ", " +
                                             std::to_string(y) + ") is invalid");
      }
      const auto rx = find_root(parent, x);
      const auto ry = find_root(parent, y);
      if (rx == ry) return failure(Axiom::structure, "bag graph contains a cycle");
      parent[rx] = ry;
    }
  }

  std::vector<std::size_t> occurrences(n, 0);
  for (const auto& bag : td.bags) {
    for (Player v : bag) ++occurrences[v];
  }
  for (Player v = 0; v < n; ++v) {
    if (occurrences[v] == 0) {
      auto r = failure(Axiom::cover, "vertex " + std::to_string(v) + " is in no bag");
      r.vertex = v;
      return r;
    }
  }

  std::unordered_set<std::uint64_t> covered;
  for (const auto& bag : td.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) covered.insert(edge_key(bag[i], bag[j]));
    }
  }
  for (const Edge& e : graph.edges()) {
    if (!covered.contains(edge_key(e.u, e.v))) {
      auto r = failure(Axiom::edge, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                        ") is in no bag");
      r.edge = e;
      return r;
    }
  }

  // In a tree, the bags holding v induce a subtree iff they span exactly
  // occurrences[v] - 1 tree edges.
  std::vector<std::size_t> shared(n, 0);
  std::vector<Player> both;
  for (auto [x, y] : td.tree_edges) {
    both.clear();
    std::set_intersection(td.bags[x].begin(), td.bags[x].end(), td.bags[y].begin(),
                          td.bags[y].end(), std::back_inserter(both));
    for (Player v : both) ++shared[v];
  }
  for (Player v = 0; v < n; ++v) {
    if (shared[v] + 1 != occurrences[v]) {
      auto r = failure(Axiom::connectivity,
                       "bags containing vertex " + std::to_string(v) + " are not connected");
      r.vertex = v;
      return r;
    }
  }
  return {};
}

std::vector<Player> min_fill_order(const Graph& graph) {
  const std::size_t n = graph.player_count();
  EliminationGraph work(graph);
  std::vector<std::size_t> fill(n);
  for (Player v = 0; v < n; ++v) fill[v] = work.fill_in(v);
  std::vector<char> alive(n, 1);
  std::vector<Player> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Player pick = 0;
    bool have = false;
    for (Player v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      if (!have || fill[v] < fill[pick] ||
          (fill[v] == fill[pick] && work.neighbors(v).size() < work.neighbors(pick).size())) {
        pick = v;
        have = true;
      }
    }
    order.push_back(pick);
    alive[pick] = 0;
    // Fill values change only within distance two of the eliminated vertex.
    std::vector<Player> touched;
    for (Player w : work.neighbors(pick)) {
      touched.push_back(w);
      for (Player x : work.neighbors(w)) touched.push_back(x);
    }
    work.eliminate(pick);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (Player w : touched) {
      if (alive[w]) fill[w] = work.fill_in(w);
    }
  }
  return order;
}

TreeDecomposition elimination_decomposition(const Graph& graph, std::span<const Player> order) {
  const std::size_t n = graph.player_count();
  if (order.size() != n) throw std::invalid_argument("elimination order must list every vertex");
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> position(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != kUnset) {
      throw std::invalid_argument("elimination order is not a permutation");
    }
    position[order[i]] = i;
  }

  TreeDecomposition td;
  td.vertex_count = n;
  td.bags.resize(n);
  EliminationGraph work(graph);
  std::vector<std::size_t> component_roots;
  for (std::size_t i = 0; i < n; ++i) {
    const Player v = order[i];
    const auto& later = work.neighbors(v);
    auto& bag = td.bags[i];
    bag.assign(later.begin(), later.end());
    bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
    if (later.empty()) {
      component_roots.push_back(i);
    } else {
      std::size_t next = kUnset;
      for (Player w : later) next = std::min(next, position[w]);
      td.tree_edges.emplace_back(i, next);
    }
    work.eliminate(v);
  }
  for (std::size_t i = 1; i < component_roots.size(); ++i) {
    td.tree_edges.emplace_back(component_roots[i - 1], component_roots[i]);
  }
  for (auto& [a, b] : td.tree_edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(td.tree_edges.begin(), td.tree_edges.end());
  return td;
}

TreeDecomposition heuristic_decomposition(const Graph& graph) {
  const auto order = min_fill_order(graph);
  return elimination_decomposition(graph, order);
}

std::size_t NiceTreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& node : nodes) largest = std::max(largest, node.bag.size());
  return largest == 0 ? 0 : largest - 1;
}

TreeDecomposition NiceTreeDecomposition::as_tree_decomposition() const {
  TreeDecomposition td;
  td.vertex_count = vertex_count;
  td.bags.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    td.bags.push_back(nodes[i].bag);
    for (std::size_t c : nodes[i].children) td.tree_edges.emplace_back(c, i);
  }
  return td;
}

NiceTreeDecomposition to_nice(const TreeDecomposition& td, const Graph& graph) {
  if (const auto check = validate(td, graph); !check) {
    throw std::invalid_argument("invalid tree decomposition: " + check.message);
  }
  NiceTreeDecomposition nice;
  nice.vertex_count = td.vertex_count;
  auto add = [&](NiceKind kind, std::vector<Player> bag, Player vertex,
                 std::vector<std::size_t> children) {
    nice.nodes.push_back({kind, std::move(bag), vertex, std::move(children)});
    return nice.nodes.size() - 1;
  };
  // Walks from node `from` (whose bag is nice.nodes[from].bag) to bag `target`.
  auto transition = [&](std::size_t from, const std::vector<Player>& target) {
    std::vector<Player> current = nice.nodes[from].bag;
    std::vector<Player> gone;
    std::vector<Player> fresh;
    std::set_difference(current.begin(), current.end(), target.begin(), target.end(),
                        std::back_inserter(gone));
    std::set_difference(target.begin(), target.end(), current.begin(), current.end(),
                        std::back_inserter(fresh));
    for (Player v : gone) {
      current.erase(std::lower_bound(current.begin(), current.end(), v));
      from = add(NiceKind::forget, current, v, {from});
    }
    for (Player v : fresh) {
      current.insert(std::upper_bound(current.begin(), current.end(), v), v);
      from = add(NiceKind::introduce, current, v, {from});
    }
    return from;
  };

  if (td.bags.empty()) {
    nice.root = add(NiceKind::leaf, {}, 0, {});
    return nice;
  }

  const std::size_t b = td.bags.size();
  std::vector<std::vector<std::size_t>> adjacent(b);
  for (auto [x, y] : td.tree_edges) {
    adjacent[x].push_back(y);
    adjacent[y].push_back(x);
  }
  for (auto& list : adjacent) std::sort(list.begin(), list.end());

  // Iterative post-order from bag 0.
  std::vector<std::size_t> parent(b, b);
  std::vector<std::size_t> order;
  std::vector<std::size_t> stack{0};
  parent[0] = 0;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (std::size_t y : adjacent[x]) {
      if (parent[y] == b) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::reverse(order.begin(), order.end());

  std::vector<std::size_t> top(b, 0);
  for (std::size_t x : order) {
    std::vector<std::size_t> parts;
    for (std::size_t y : adjacent[x]) {
      if (parent[y] == x) parts.push_back(transition(top[y], td.bags[x]));
    }
    std::size_t node;
    if (parts.empty()) {
      node = transition(add(NiceKind::leaf, {}, 0, {}), td.bags[x]);
    } else {
      node = parts[0];
      for (std::size_t k = 1; k < parts.size(); ++k) {
        node = add(NiceKind::join, td.bags[x], 0, {node, parts[k]});
      }
    }
    top[x] = node;
  }
  nice.root = transition(top[0], {});
  return nice;
}

ValidationResult validate_nice(const NiceTreeDecomposition& ntd, const Graph& graph) {
  const std::size_t count = ntd.nodes.size();
  if (count == 0 || ntd.root >= count) {
    return failure(Axiom::structure, "nice decomposition has no root");
  }
  std::vector<std::size_t> parents(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t c : ntd.nodes[i].children) {
      if (c >= i) {
        auto r = failure(Axiom::structure,
                         "node " + std::to_string(i) + " does not come after its children");
        r.bag = i;
        return r;
      }
      ++parents[c];
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t expected = i == ntd.root ? 0 : 1;
    if (parents[i] != expected) {
      auto r = failure(Axiom::structure,
                       "node " + std::to_string(i) + " has " + std::to_string(parents[i]) +
                           " parents");
      r.bag = i;
      return r;
    }
  }
  if (auto base = validate(ntd.as_tree_decomposition(), graph); !base) return base;

  auto bad = [](std::size_t i, const std::string& what) {
    auto r = failure(Axiom::nice_form, "node " + std::to_string(i) + ": " + what);
    r.bag = i;
    return r;
  };
  if (!ntd.nodes[ntd.root].bag.empty()) return bad(ntd.root, "root bag is not empty");
  std::vector<std::size_t> forgotten(graph.player_count(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const NiceNode& node = ntd.nodes[i];
    switch (node.kind) {
      case NiceKind::leaf:
        if (!node.children.empty() || !node.bag.empty()) return bad(i, "leaf must be empty");
        break;
      case NiceKind::introduce: {
        if (node.children.size() != 1) return bad(i, "introduce needs one child");
        auto expected = ntd.nodes[node.children[0]].bag;
        if (std::binary_search(expected.begin(), expected.end(), node.vertex)) {
          return bad(i, "introduced vertex already in child bag");
        }
        expected.insert(std::upper_bound(expected.begin(), expected.end(), node.vertex),
                        node.vertex);
        if (expected != node.bag) return bad(i, "introduce bag mismatch");
        break;
      }
      case NiceKind::forget: {
        if (node.children.size() != 1) return bad(i, "forget needs one child");
        auto expected = ntd.nodes[node.children[0]].bag;
        auto it = std::lower_bound(expected.begin(), expected.end(), node.vertex);
        if (it == expected.end() || *it != node.vertex) {
          return bad(i, "forgotten vertex not in child bag");
        }
        expected.erase(it);
        if (expected != node.bag) return bad(i, "forget bag mismatch");
        ++forgotten[node.vertex];
        break;
      }
      case NiceKind::join:
        if (node.children.size() != 2) return bad(i, "join needs two children");
        if (ntd.nodes[node.children[0]].bag != node.bag ||
            ntd.nodes[node.children[1]].bag != node.bag) {
          return bad(i, "join bags differ");
        }
        break;
    }
  }
  for (Player v = 0; v < graph.player_count(); ++v) {
    if (forgotten[v] != 1) {
      auto r = failure(Axiom::nice_form, "vertex " + std::to_string(v) + " forgotten " +
                                             std::to_string(forgotten[v]) + " times");
      r.vertex = v;
      return r;
    }
  }
  return {};
}

}  // namespace bnpg
