#include "bnpg/reductions.hpp"

#include <stdexcept>

namespace bnpg {
namespace {

void require_no_isolated(const Graph& graph) {
  for (Player v = 0; v < graph.player_count(); ++v) {
    if (graph.degree(v) == 0) {
      throw std::invalid_argument("isolated vertex " + std::to_string(v));
    }
  }
}

std::string vertex_label(Player v) { return "vertex " + std::to_string(v); }

}  // namespace

ReductionOutput reduce_3ris(const Graph& graph) {
  const std::size_t n = graph.player_count();
  std::vector<std::vector<Rational>> g(n);
  std::vector<Rational> cost(n, Rational(2));
  ReductionOutput out;
  for (Player v = 0; v < n; ++v) {
    for (std::size_t x = 0; x <= graph.closed_degree(v); ++x) {
      g[v].emplace_back(static_cast<long>(x <= 3 ? x : x + 1));
    }
    out.witness_map.push_back({vertex_label(v), v});
  }
  out.game = Game(graph, std::move(g), std::move(cost));
  return out;
}

ReductionOutput reduce_clique_to_uswc(const Graph& graph, std::size_t kappa) {
  if (kappa < 2) throw std::invalid_argument("kappa must be at least 2");
  require_no_isolated(graph);

  const std::size_t n = graph.player_count();
  const auto edges = graph.edges();
  const std::size_t m = edges.size();
  const auto special = static_cast<Player>(n + m);
  const std::size_t clique_edges = kappa * (kappa - 1) / 2;

  std::vector<Edge> links;
  links.reserve(3 * m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto e = static_cast<Player>(n + i);
    links.push_back({edges[i].u, e});
    links.push_back({edges[i].v, e});
    links.push_back({e, special});
  }
  Graph network(n + m + 1, links);

  std::vector<std::vector<Rational>> g(n + m + 1);
  std::vector<Rational> cost(n + m + 1);
  ReductionOutput out;
  for (Player v = 0; v < n; ++v) {
    g[v].assign(network.closed_degree(v) + 1, Rational(0));
    g[v][0] = 1;
    cost[v] = 1;
    out.witness_map.push_back({vertex_label(v), v});
  }
  for (std::size_t i = 0; i < m; ++i) {
    const auto e = static_cast<Player>(n + i);
    g[e] = {1, 0, 0, 0, 0};
    cost[e] = 0;
    out.witness_map.push_back(
        {"edge " + std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v), e});
  }
  g[special].assign(m + 2, Rational(0));
  if (clique_edges < g[special].size()) g[special][clique_edges] = static_cast<long>(m);
  cost[special] = static_cast<long>(m);
  out.witness_map.push_back({"special", special});

  out.threshold = Rational(static_cast<long>(n - kappa)) +
                  Rational(static_cast<long>(m)) - Rational(static_cast<long>(clique_edges)) +
                  Rational(static_cast<long>(m));
  if (m <= kappa + clique_edges) {
    out.warnings.push_back("m = " + std::to_string(m) + " <= kappa + kappa(kappa-1)/2 = " +
                           std::to_string(kappa + clique_edges) +
                           ": the all-abstain profile reaches the threshold");
  }
  out.game = Game(std::move(network), std::move(g), std::move(cost));
  return out;
}

ReductionOutput reduce_rbds_to_eswc(const RedBlueGraph& instance, std::size_t kappa) {
  if (kappa < 1) throw std::invalid_argument("kappa must be at least 1");
  const Graph& graph = instance.graph;
  if (instance.red.size() != graph.player_count()) {
    throw std::invalid_argument("colouring does not cover every vertex");
  }
  require_no_isolated(graph);
  for (const Edge& e : graph.edges()) {
    if (instance.is_red(e.u) == instance.is_red(e.v)) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") joins two vertices of the same colour");
    }
  }

  const std::size_t n = graph.player_count();
  const auto special = static_cast<Player>(n);
  std::vector<Edge> links = graph.edges();
  for (Player b : instance.blue_vertices()) links.push_back({b, special});
  Graph network(n + 1, links);

  std::vector<std::vector<Rational>> g(n + 1);
  std::vector<Rational> cost(n + 1, Rational(1));
  ReductionOutput out;
  for (Player v = 0; v < n; ++v) {
    const std::size_t size = network.closed_degree(v) + 1;
    if (instance.is_red(v)) {
      g[v].assign(size, Rational(1));
      g[v][0] = 0;
    } else {
      g[v].assign(size, Rational(0));
      g[v][0] = 1;
      g[v][1] = 2;
    }
    out.witness_map.push_back({vertex_label(v), v});
  }
  g[special].assign(network.closed_degree(special) + 1, Rational(0));
  for (std::size_t x = 0; x < g[special].size() && x <= kappa; ++x) g[special][x] = 1;
  out.witness_map.push_back({"special", special});

  out.threshold = Rational(1);
  out.game = Game(std::move(network), std::move(g), std::move(cost));
  return out;
}

}  // namespace bnpg
