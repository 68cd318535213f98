#include "bnpg/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "bnpg/critical_clique.hpp"

namespace bnpg {
namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<Edge> random_tree(Rng& rng, std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.push_back({static_cast<Player>(uniform(rng, 0, v - 1)), static_cast<Player>(v)});
  }
  return edges;
}

Graph twin_expanded(Rng& rng, const GameSpec& spec) {
  std::vector<std::size_t> sizes = spec.multiplicities;
  if (sizes.empty()) {
    for (std::size_t i = 0; i < spec.n; ++i) sizes.push_back(uniform(rng, 1, 3));
  } else if (sizes.size() != spec.n) {
    throw std::invalid_argument("multiplicities must list one size per tree node");
  }
  if (std::find(sizes.begin(), sizes.end(), 0U) != sizes.end()) {
    throw std::invalid_argument("multiplicities must be positive");
  }
  std::vector<std::size_t> first(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) first[i + 1] = first[i] + sizes[i];

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t a = first[i]; a < first[i + 1]; ++a) {
      for (std::size_t b = a + 1; b < first[i + 1]; ++b) {
        edges.push_back({static_cast<Player>(a), static_cast<Player>(b)});
      }
    }
  }
  for (const Edge& t : random_tree(rng, sizes.size())) {
    for (std::size_t a = first[t.u]; a < first[t.u + 1]; ++a) {
      for (std::size_t b = first[t.v]; b < first[t.v + 1]; ++b) {
        edges.push_back({static_cast<Player>(a), static_cast<Player>(b)});
      }
    }
  }
  Graph graph(first.back(), edges);
  // Adjacent nodes whose cliques end up as closed twins (an isolated tree
  // edge) merge into one critical clique. The result is still a forest, which
  // is what callers rely on.
  if (!is_forest(build_cc_graph(graph))) {
    throw std::logic_error("twin expansion produced a non-forest critical clique graph");
  }
  return graph;
}

Graph partial_ktree(Rng& rng, std::size_t n, std::size_t k, double p) {
  std::vector<Edge> edges;
  std::vector<std::vector<Player>> cliques;
  const std::size_t base = std::min(n, k + 1);
  for (Player a = 0; a < base; ++a) {
    for (Player b = a + 1; b < base; ++b) edges.push_back({a, b});
  }
  if (base == k + 1 && k > 0) {
    for (std::size_t skip = 0; skip < base; ++skip) {
      std::vector<Player> clique;
      for (Player a = 0; a < base; ++a) {
        if (a != skip) clique.push_back(a);
      }
      cliques.push_back(std::move(clique));
    }
  }
  for (std::size_t v = base; v < n && !cliques.empty(); ++v) {
    const auto& host = cliques[uniform(rng, 0, cliques.size() - 1)];
    const std::vector<Player> chosen = host;
    for (Player a : chosen) edges.push_back({a, static_cast<Player>(v)});
    for (std::size_t skip = 0; skip < chosen.size(); ++skip) {
      std::vector<Player> clique;
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        if (j != skip) clique.push_back(chosen[j]);
      }
      clique.push_back(static_cast<Player>(v));
      cliques.push_back(std::move(clique));
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges) {
    if (coin(rng, p)) kept.push_back(e);
  }
  return Graph(n, kept);
}

Graph build_graph(Rng& rng, const GameSpec& spec) {
  const std::size_t n = spec.n;
  switch (spec.family) {
    case Family::path: return make_path(n);
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("a cycle needs at least 3 players");
      return make_cycle(n);
    case Family::clique: return make_complete(n);
    case Family::tree: return Graph(n, random_tree(rng, n));
    case Family::caterpillar: {
      const std::size_t spine = std::max<std::size_t>(1, n / 2);
      std::vector<Edge> edges;
      for (std::size_t v = 1; v < std::min(spine, n); ++v) {
        edges.push_back({static_cast<Player>(v - 1), static_cast<Player>(v)});
      }
      for (std::size_t v = spine; v < n; ++v) {
        edges.push_back({static_cast<Player>(uniform(rng, 0, spine - 1)), static_cast<Player>(v)});
      }
      return Graph(n, edges);
    }
    case Family::twin_expanded_tree: return twin_expanded(rng, spec);
    case Family::gnp: {
      if (spec.p < 0 || spec.p > 1) throw std::invalid_argument("p must lie in [0, 1]");
      std::vector<Edge> edges;
      for (Player a = 0; a < n; ++a) {
        for (Player b = a + 1; b < n; ++b) {
          if (coin(rng, spec.p)) edges.push_back({a, b});
        }
      }
      return Graph(n, edges);
    }
    case Family::bounded_tw:
      if (spec.p < 0 || spec.p > 1) throw std::invalid_argument("p must lie in [0, 1]");
      return partial_ktree(rng, n, spec.width, spec.p);
  }
  throw std::invalid_argument("unknown graph family");
}

Rational draw_cost(Rng& rng, const GameSpec& spec) {
  switch (spec.cost) {
    case CostKind::unit: return 1;
    case CostKind::zero: return 0;
    case CostKind::integer: return static_cast<long>(uniform(rng, 0, spec.max_value));
    case CostKind::rational: {
      const auto den = static_cast<long>(uniform(rng, 1, 3));
      const auto num = static_cast<long>(uniform(rng, 0, spec.max_value * den));
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
  }
  throw std::invalid_argument("unknown cost kind");
}

std::vector<Rational> draw_table(Rng& rng, const GameSpec& spec, std::size_t size) {
  std::vector<Rational> row(size);
  long level = static_cast<long>(uniform(rng, 0, spec.max_value));
  for (std::size_t k = 0; k < size; ++k) {
    switch (spec.externality) {
      case ExternalityKind::monotone:
        row[k] = level;
        level += static_cast<long>(uniform(rng, 0, 2));
        break;
      case ExternalityKind::arbitrary:
      case ExternalityKind::homogeneous:
        row[k] = static_cast<long>(uniform(rng, 0, spec.max_value));
        break;
      case ExternalityKind::zero: row[k] = 0; break;
    }
  }
  return row;
}

}  // namespace

Graph gen_graph(const GameSpec& spec) {
  Rng rng(spec.seed);
  return build_graph(rng, spec);
}

Game gen_random_game(const GameSpec& spec) {
  Rng rng(spec.seed);
  Graph graph = build_graph(rng, spec);
  const std::size_t n = graph.player_count();
  std::vector<std::vector<Rational>> g(n);
  std::vector<Rational> cost(n);
  if (spec.externality == ExternalityKind::homogeneous) {
    std::size_t longest = 1;
    for (Player v = 0; v < n; ++v) longest = std::max(longest, graph.closed_degree(v) + 1);
    const auto shared = draw_table(rng, spec, longest);
    const Rational shared_cost = draw_cost(rng, spec);
    for (Player v = 0; v < n; ++v) {
      g[v].assign(shared.begin(),
                  shared.begin() + static_cast<std::ptrdiff_t>(graph.closed_degree(v) + 1));
      cost[v] = shared_cost;
    }
  } else {
    for (Player v = 0; v < n; ++v) {
      g[v] = draw_table(rng, spec, graph.closed_degree(v) + 1);
      cost[v] = draw_cost(rng, spec);
    }
  }
  return Game(std::move(graph), std::move(g), std::move(cost));
}

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 8> kFamilies{{
    {"path", Family::path},
    {"cycle", Family::cycle},
    {"clique", Family::clique},
    {"tree", Family::tree},
    {"caterpillar", Family::caterpillar},
    {"twin-expanded-tree", Family::twin_expanded_tree},
    {"gnp", Family::gnp},
    {"bounded-tw", Family::bounded_tw},
}};

}  // namespace

std::string to_string(Family family) {
  for (const auto& [name, f] : kFamilies) {
    if (f == family) return std::string(name);
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [label, f] : kFamilies) {
    if (label == name) return f;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

ExternalityKind parse_externality_kind(std::string_view name) {
  if (name == "monotone") return ExternalityKind::monotone;
  if (name == "arbitrary") return ExternalityKind::arbitrary;
  if (name == "homogeneous") return ExternalityKind::homogeneous;
  if (name == "zero") return ExternalityKind::zero;
  throw std::invalid_argument("unknown externality kind '" + std::string(name) + "'");
}

CostKind parse_cost_kind(std::string_view name) {
  if (name == "unit") return CostKind::unit;
  if (name == "integer") return CostKind::integer;
  if (name == "rational") return CostKind::rational;
  if (name == "zero") return CostKind::zero;
  throw std::invalid_argument("unknown cost kind '" + std::string(name) + "'");
}

}  // namespace bnpg
