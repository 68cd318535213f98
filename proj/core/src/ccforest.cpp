#include "bnpg/ccforest.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "bnpg/critical_clique.hpp"

namespace bnpg {

std::string to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::no_psne: return "no_psne";
    case SolveStatus::not_applicable: return "not_applicable";
  }
  return "unknown";
}

namespace ccforest {
namespace {

using Clock = std::chrono::steady_clock;

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

// Plain max-plus arithmetic on Rational, or pure feasibility on Unit.
template <class V>
struct Algebra;

template <>
struct Algebra<Unit> {
  static Unit zero() { return {}; }
  static Unit add(Unit, Unit) { return {}; }
  static bool better(Unit, Unit) { return false; }
};

template <>
struct Algebra<Rational> {
  static Rational zero() { return 0; }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static bool better(const Rational& a, const Rational& b) { return a > b; }
};

template <class V>
void keep_best(std::optional<V>& slot, V candidate) {
  if (!slot || Algebra<V>::better(candidate, *slot)) slot = std::move(candidate);
}

// One clique of the rooted forest.
struct CliqueNode {
  std::vector<Player> members;
  std::size_t parent_size = 0;
  std::vector<std::size_t> children;
  std::size_t child_total = 0;

  std::size_t max_total() const { return members.size() + parent_size + child_total; }
};

// Local rules. Each exposes a per-clique cache answering
//   local(x, t):     contribution of K's own members, or nullopt if no choice
//                    of x investors in K is consistent at closed total t;
//   investors(x, t): the members chosen to invest.

class PsneRule {
 public:
  using Value = Unit;
  explicit PsneRule(const Game& game) : game_(&game) {}

  class Cache {
   public:
    Cache(const Game& game, const std::vector<Player>& members, std::size_t max_total)
        : game_(&game), members_(&members) {
      for (std::size_t t = 0; t <= max_total; ++t) {
        const auto split = classify_clique_members(game, members, t);
        rows_.push_back({split.contradiction || split.out_of_range, split.must_invest.size(),
                         split.must_invest.size() + split.free.size()});
      }
    }
    std::optional<Unit> local(std::size_t x, std::size_t t) const {
      const Row& r = rows_[t];
      if (r.dead || x < r.low || x > r.high) return std::nullopt;
      return Unit{};
    }
    std::vector<Player> investors(std::size_t x, std::size_t t) const {
      const auto split = classify_clique_members(*game_, *members_, t);
      std::vector<Player> out = split.must_invest;
      out.insert(out.end(), split.free.begin(),
                 split.free.begin() + static_cast<std::ptrdiff_t>(x - out.size()));
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    struct Row {
      bool dead;
      std::size_t low;
      std::size_t high;
    };
    const Game* game_;
    const std::vector<Player>* members_;
    std::vector<Row> rows_;
  };

  Cache cache(const std::vector<Player>& members, std::size_t max_total) const {
    return Cache(*game_, members, max_total);
  }

 private:
  const Game* game_;
};

class UswRule {
 public:
  using Value = Rational;
  explicit UswRule(const Game& game) : game_(&game) {}

  class Cache {
   public:
    Cache(const Game& game, const std::vector<Player>& members, std::size_t max_total)
        : by_cost_(members) {
      // Cheapest first; ties by player index.
      std::stable_sort(by_cost_.begin(), by_cost_.end(), [&](Player a, Player b) {
        return game.cost(a) < game.cost(b);
      });
      prefix_cost_.assign(1, Rational(0));
      for (Player v : by_cost_) prefix_cost_.push_back(prefix_cost_.back() + game.cost(v));
      benefit_.assign(max_total + 1, Rational(0));
      for (std::size_t t = 0; t <= max_total; ++t) {
        for (Player v : members) benefit_[t] += game.externality(v, t);
      }
    }
    std::optional<Rational> local(std::size_t x, std::size_t t) const {
      return benefit_[t] - prefix_cost_[x];
    }
    std::vector<Player> investors(std::size_t x, std::size_t) const {
      std::vector<Player> out(by_cost_.begin(), by_cost_.begin() + static_cast<std::ptrdiff_t>(x));
      std::sort(out.begin(), out.end());
      return out;
    }

   private:
    std::vector<Player> by_cost_;
    std::vector<Rational> prefix_cost_;
    std::vector<Rational> benefit_;
  };

  Cache cache(const std::vector<Player>& members, std::size_t max_total) const {
    return Cache(*game_, members, max_total);
  }

 private:
  const Game* game_;
};

// Everyone must end up with payoff >= threshold.
class EswRule {
 public:
  using Value = Unit;
  EswRule(const Game& game, Rational threshold) : game_(&game), threshold_(std::move(threshold)) {}

  class Cache {
   public:
    Cache(const Game& game, const std::vector<Player>& members, std::size_t max_total,
          const Rational& q)
        : game_(&game), members_(&members), q_(&q) {
      for (std::size_t t = 0; t <= max_total; ++t) {
        bool below = false;        // someone is under q even without paying
        std::size_t priced_out = 0;  // members who fall under q if they invest
        for (Player v : members) {
          const Rational& g = game.externality(v, t);
          if (g < q) {
            below = true;
            break;
          }
          if (g - game.cost(v) < q) ++priced_out;
        }
        rows_.push_back({below, priced_out});
      }
    }
    std::optional<Unit> local(std::size_t x, std::size_t t) const {
      const Row& r = rows_[t];
      if (r.below || r.priced_out > members_->size() - x) return std::nullopt;
      return Unit{};
    }
    std::vector<Player> investors(std::size_t x, std::size_t t) const {
      std::vector<Player> out;
      for (Player v : *members_) {
        if (out.size() == x) break;
        if (game_->externality(v, t) - game_->cost(v) >= *q_) out.push_back(v);
      }
      return out;
    }

   private:
    struct Row {
      bool below;
      std::size_t priced_out;
    };
    const Game* game_;
    const std::vector<Player>* members_;
    const Rational* q_;
    std::vector<Row> rows_;
  };

  Cache cache(const std::vector<Player>& members, std::size_t max_total) const {
    return Cache(*game_, members, max_total, threshold_);
  }

 private:
  const Game* game_;
  Rational threshold_;
};

template <class Rule>
class ForestDp {
 public:
  using Value = typename Rule::Value;
  using Alg = Algebra<Value>;
  using Cell = std::optional<Value>;

  ForestDp(const Game& game, const CriticalCliqueGraph& cc, const RootedCliqueForest& forest,
           Rule rule)
      : game_(game), forest_(forest), rule_(std::move(rule)) {
    nodes_.resize(cc.clique_count());
    for (std::size_t k = 0; k < cc.clique_count(); ++k) {
      CliqueNode& node = nodes_[k];
      node.members = cc.cliques[k];
      if (forest.parent[k]) node.parent_size = cc.cliques[*forest.parent[k]].size();
      node.children = forest.children[k];
      for (std::size_t c : node.children) node.child_total += cc.cliques[c].size();
    }
  }

  // Fills every table bottom-up. Returns the combined root value, or nullopt
  // when some component has no feasible root entry.
  std::optional<Value> run(SolveStats& stats) {
    tables_.assign(nodes_.size(), {});
    caches_.clear();
    caches_.reserve(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      caches_.push_back(rule_.cache(nodes_[k].members, nodes_[k].max_total()));
    }
    for (std::size_t k : forest_.post_order) {
      fill(k);
      stats.table_entries += tables_[k].size();
      stats.peak_node_entries = std::max(stats.peak_node_entries, tables_[k].size());
    }
    ++stats.passes;

    Value total = Alg::zero();
    for (std::size_t root : forest_.roots) {
      const auto best = best_root_entry(root);
      if (!best) return std::nullopt;
      total = Alg::add(total, std::get<2>(*best));
    }
    return total;
  }

  // Backtracks a witness profile; call after a successful run().
  Profile extract() const {
    Profile profile(game_.player_count());
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> stack;
    for (std::size_t root : forest_.roots) {
      const auto best = best_root_entry(root);
      stack.emplace_back(root, std::get<0>(*best), 0, std::get<1>(*best));
    }
    while (!stack.empty()) {
      const auto [k, x, y, z] = stack.back();
      stack.pop_back();
      const CliqueNode& node = nodes_[k];
      for (Player v : caches_[k].investors(x, x + y + z)) profile.set(v, true);

      const auto history = merge_children(k, x);
      std::size_t remaining = z;
      for (std::size_t j = node.children.size(); j-- > 0;) {
        const std::size_t child = node.children[j];
        const auto best = best_over_z(child, x);
        const auto& before = history[j];
        const Value& target = *history[j + 1][remaining];
        bool placed = false;
        for (std::size_t xj = 0; xj < best.size() && xj <= remaining && !placed; ++xj) {
          if (!best[xj] || !before[remaining - xj]) continue;
          if (!(Alg::add(*before[remaining - xj], best[xj]->first) == target)) continue;
          stack.emplace_back(child, xj, x, best[xj]->second);
          remaining -= xj;
          placed = true;
        }
        if (!placed) throw std::logic_error("clique forest backtracking lost its witness");
      }
    }
    return profile;
  }

 private:
  std::size_t index(const CliqueNode& node, std::size_t x, std::size_t y, std::size_t z) const {
    return (x * (node.parent_size + 1) + y) * (node.child_total + 1) + z;
  }

  const Cell& at(std::size_t k, std::size_t x, std::size_t y, std::size_t z) const {
    return tables_[k][index(nodes_[k], x, y, z)];
  }

  // For child c with its parent holding `parent_x` investors: per x_c, the
  // best entry over z_c and the z_c achieving it.
  std::vector<std::optional<std::pair<Value, std::size_t>>> best_over_z(
      std::size_t c, std::size_t parent_x) const {
    const CliqueNode& child = nodes_[c];
    std::vector<std::optional<std::pair<Value, std::size_t>>> best(child.members.size() + 1);
    for (std::size_t xc = 0; xc <= child.members.size(); ++xc) {
      for (std::size_t zc = 0; zc <= child.child_total; ++zc) {
        const Cell& cell = at(c, xc, parent_x, zc);
        if (cell && (!best[xc] || Alg::better(*cell, best[xc]->first))) best[xc] = {*cell, zc};
      }
    }
    return best;
  }

  // history[i][s]: best combination of the first i children with s investors
  // among them in total, given x investors in the parent clique.
  std::vector<std::vector<Cell>> merge_children(std::size_t k, std::size_t x) const {
    const CliqueNode& node = nodes_[k];
    std::vector<std::vector<Cell>> history;
    history.reserve(node.children.size() + 1);
    history.emplace_back(node.child_total + 1);
    history.back()[0] = Alg::zero();
    std::size_t reach = 0;
    for (std::size_t c : node.children) {
      const auto best = best_over_z(c, x);
      const auto& acc = history.back();
      std::vector<Cell> next(node.child_total + 1);
      for (std::size_t s = 0; s <= reach; ++s) {
        if (!acc[s]) continue;
        for (std::size_t xc = 0; xc < best.size(); ++xc) {
          if (best[xc]) keep_best(next[s + xc], Alg::add(*acc[s], best[xc]->first));
        }
      }
      reach += nodes_[c].members.size();
      history.push_back(std::move(next));
    }
    return history;
  }

  void fill(std::size_t k) {
    const CliqueNode& node = nodes_[k];
    auto& table = tables_[k];
    table.assign((node.members.size() + 1) * (node.parent_size + 1) * (node.child_total + 1),
                 std::nullopt);
    for (std::size_t x = 0; x <= node.members.size(); ++x) {
      const auto merged = merge_children(k, x).back();
      for (std::size_t z = 0; z <= node.child_total; ++z) {
        if (!merged[z]) continue;
        for (std::size_t y = 0; y <= node.parent_size; ++y) {
          auto own = caches_[k].local(x, x + y + z);
          if (own) table[index(node, x, y, z)] = Alg::add(*own, *merged[z]);
        }
      }
    }
  }

  std::optional<std::tuple<std::size_t, std::size_t, Value>> best_root_entry(
      std::size_t root) const {
    const CliqueNode& node = nodes_[root];
    std::optional<std::tuple<std::size_t, std::size_t, Value>> best;
    for (std::size_t x = 0; x <= node.members.size(); ++x) {
      for (std::size_t z = 0; z <= node.child_total; ++z) {
        const Cell& cell = at(root, x, 0, z);
        if (cell && (!best || Alg::better(*cell, std::get<2>(*best)))) best.emplace(x, z, *cell);
      }
    }
    return best;
  }

  const Game& game_;
  const RootedCliqueForest& forest_;
  Rule rule_;
  std::vector<CliqueNode> nodes_;
  std::vector<typename Rule::Cache> caches_;
  std::vector<std::vector<Cell>> tables_;
};

struct Prepared {
  CriticalCliqueGraph cc;
  std::optional<RootedCliqueForest> forest;
};

Prepared prepare(const Game& game) {
  Prepared p{build_cc_graph(game.graph()), std::nullopt};
  if (is_forest(p.cc)) p.forest = rooted_forest(p.cc);
  return p;
}

SolveReport not_a_forest(const char* algorithm) {
  SolveReport report;
  report.status = SolveStatus::not_applicable;
  report.algorithm = algorithm;
  report.message = "critical clique graph is not a forest";
  return report;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

CliqueClassification classify_clique_members(const Game& game, std::span<const Player> clique,
                                             std::size_t total) {
  CliqueClassification out;
  for (Player v : clique) {
    const auto g = game.externality_table(v);
    if (total >= g.size()) {
      out.out_of_range = true;
      continue;
    }
    const Rational& c = game.cost(v);
    // Investing at this total is a strict loss (or impossible at total 0).
    const bool abstain = total == 0 || g[total] - c < g[total - 1];
    // Abstaining is a strict loss (or impossible when all of N[v] invests).
    const bool invest = total + 1 == g.size() || g[total] < g[total + 1] - c;
    if (abstain && invest) out.contradiction = true;
    if (abstain) {
      out.must_abstain.push_back(v);
    } else if (invest) {
      out.must_invest.push_back(v);
    } else {
      out.free.push_back(v);
    }
  }
  return out;
}

SolveReport solve_psne(const Game& game) {
  const auto start = Clock::now();
  const Prepared prep = prepare(game);
  if (!prep.forest) return not_a_forest("ccforest");

  SolveReport report;
  report.algorithm = "ccforest";
  ForestDp<PsneRule> dp(game, prep.cc, *prep.forest, PsneRule(game));
  if (dp.run(report.stats)) {
    report.status = SolveStatus::solved;
    report.profile = dp.extract();
  } else {
    report.status = SolveStatus::no_psne;
    report.message = "no pure-strategy Nash equilibrium";
  }
  report.stats.elapsed_ms = elapsed_ms(start);
  return report;
}

SolveReport solve_usw(const Game& game) {
  const auto start = Clock::now();
  const Prepared prep = prepare(game);
  if (!prep.forest) return not_a_forest("ccforest");

  SolveReport report;
  report.algorithm = "ccforest";
  ForestDp<UswRule> dp(game, prep.cc, *prep.forest, UswRule(game));
  const auto value = dp.run(report.stats);
  if (!value) throw std::logic_error("utilitarian table has no feasible root entry");
  report.status = SolveStatus::solved;
  report.value = *value;
  report.profile = dp.extract();
  report.stats.elapsed_ms = elapsed_ms(start);
  return report;
}

SolveReport solve_esw(const Game& game) {
  if (game.player_count() == 0) {
    throw std::invalid_argument("egalitarian welfare of a game without players");
  }
  const auto start = Clock::now();
  const Prepared prep = prepare(game);
  if (!prep.forest) return not_a_forest("ccforest");

  SolveReport report;
  report.algorithm = "ccforest";
  const auto candidates = attainable_payoffs(game);
  auto feasible = [&](const Rational& q) {
    ForestDp<EswRule> dp(game, prep.cc, *prep.forest, EswRule(game, q));
    return dp.run(report.stats).has_value();
  };
  // Feasibility is monotone in q and the smallest candidate is always met.
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    if (feasible(candidates[mid])) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  ForestDp<EswRule> dp(game, prep.cc, *prep.forest, EswRule(game, candidates[lo]));
  if (!dp.run(report.stats)) throw std::logic_error("lowest egalitarian threshold infeasible");
  report.status = SolveStatus::solved;
  report.profile = dp.extract();
  report.value = candidates[lo];
  report.stats.elapsed_ms = elapsed_ms(start);
  return report;
}

}  // namespace ccforest
}  // namespace bnpg
