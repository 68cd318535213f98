#include "bnpg/treewidth.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace bnpg::treewidth {
namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

struct Unit {
  friend bool operator==(Unit, Unit) { return true; }
};

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

// (U, f): U as a bitmask over bag positions, f aligned with the bag.
struct State {
  Mask invest = 0;
  std::vector<std::uint32_t> counts;

  friend bool operator==(const State&, const State&) = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = std::hash<Mask>{}(s.invest);
    for (auto c : s.counts) h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);

class PsneRule {
 public:
  using Value = Unit;
  explicit PsneRule(const Game& game) : game_(&game) {}
  std::optional<Unit> on_forget(Player v, bool invests, std::size_t count) const {
    if (!stable(*game_, v, invests, count)) return std::nullopt;
    return Unit{};
  }

 private:
  const Game* game_;
};

class UswRule {
 public:
  using Value = Rational;
  explicit UswRule(const Game& game) : game_(&game) {}
  std::optional<Rational> on_forget(Player v, bool invests, std::size_t count) const {
    return payoff_at(*game_, v, invests, count);
  }

 private:
  const Game* game_;
};

class EswRule {
 public:
  using Value = Unit;
  EswRule(const Game& game, Rational q) : game_(&game), q_(std::move(q)) {}
  std::optional<Unit> on_forget(Player v, bool invests, std::size_t count) const {
    if (payoff_at(*game_, v, invests, count) < q_) return std::nullopt;
    return Unit{};
  }

 private:
  const Game* game_;
  Rational q_;
};

template <class Rule>
class NiceDp {
 public:
  using Value = typename Rule::Value;
  using Alg = Algebra<Value>;

  NiceDp(const Game& game, const NiceTreeDecomposition& ntd, Rule rule)
      : game_(game), ntd_(ntd), rule_(std::move(rule)) {}

  std::optional<Value> run(SolveStats& stats) {
    tables_.assign(ntd_.nodes.size(), {});
    stats.node_entries.assign(ntd_.nodes.size(), 0);
    for (std::size_t i = 0; i < ntd_.nodes.size(); ++i) {
      const NiceNode& node = ntd_.nodes[i];
      switch (node.kind) {
        case NiceKind::leaf: leaf(i); break;
        case NiceKind::introduce: introduce(i); break;
        case NiceKind::forget: forget(i); break;
        case NiceKind::join: join(i); break;
      }
      const std::size_t size = tables_[i].states.size();
      stats.node_entries[i] = size;
      stats.table_entries += size;
      stats.peak_node_entries = std::max(stats.peak_node_entries, size);
    }
    ++stats.passes;
    const Table& root = tables_[ntd_.root];
    if (root.states.empty()) return std::nullopt;
    return root.values.front();
  }

  // Reads every vertex's action off its forget transition.
  Profile extract() const {
    Profile profile(game_.player_count());
    std::vector<std::pair<std::size_t, std::uint32_t>> stack{{ntd_.root, 0}};
    while (!stack.empty()) {
      const auto [i, s] = stack.back();
      stack.pop_back();
      const NiceNode& node = ntd_.nodes[i];
      const auto& from = tables_[i].from[s];
      if (node.kind == NiceKind::forget) {
        const std::size_t child = node.children[0];
        const auto& bag = ntd_.nodes[child].bag;
        const auto p = position(bag, node.vertex);
        profile.set(node.vertex, (tables_[child].states[from[0]].invest >> p) & 1U);
      }
      for (std::size_t k = 0; k < node.children.size(); ++k) {
        stack.emplace_back(node.children[k], from[k]);
      }
    }
    return profile;
  }

 private:
  struct Table {
    std::vector<State> states;
    std::vector<Value> values;
    std::vector<std::array<std::uint32_t, 2>> from;
  };

  // Merges `state` into `table`, keeping the better value.
  class Builder {
   public:
    explicit Builder(Table& table) : table_(table) {}
    void offer(State state, Value value, std::array<std::uint32_t, 2> from) {
      auto [it, inserted] = index_.try_emplace(state, static_cast<std::uint32_t>(table_.states.size()));
      if (inserted) {
        table_.states.push_back(std::move(state));
        table_.values.push_back(std::move(value));
        table_.from.push_back(from);
      } else if (Alg::better(value, table_.values[it->second])) {
        table_.values[it->second] = std::move(value);
        table_.from[it->second] = from;
      }
    }

   private:
    Table& table_;
    std::unordered_map<State, std::uint32_t, StateHash> index_;
  };

  static std::size_t position(const std::vector<Player>& bag, Player v) {
    return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  }

  void leaf(std::size_t i) {
    Table& t = tables_[i];
    t.states.push_back({});
    t.values.push_back(Alg::zero());
    t.from.push_back({kNone, kNone});
  }

  void introduce(std::size_t i) {
    const NiceNode& node = ntd_.nodes[i];
    const Table& child = tables_[node.children[0]];
    Table& t = tables_[i];
    const auto p = position(node.bag, node.vertex);
    const Mask low = (Mask{1} << p) - 1;
    for (std::uint32_t s = 0; s < child.states.size(); ++s) {
      const State& cs = child.states[s];
      State base;
      base.invest = (cs.invest & low) | ((cs.invest & ~low) << 1);
      base.counts = cs.counts;
      base.counts.insert(base.counts.begin() + static_cast<std::ptrdiff_t>(p), 0);
      // Distinct child states stay distinct, so no merging is needed.
      for (Mask bit : {Mask{0}, Mask{1} << p}) {
        State next = base;
        next.invest |= bit;
        t.states.push_back(std::move(next));
        t.values.push_back(child.values[s]);
        t.from.push_back({s, kNone});
      }
    }
  }

  void forget(std::size_t i) {
    const NiceNode& node = ntd_.nodes[i];
    const auto& child_bag = ntd_.nodes[node.children[0]].bag;
    const Table& child = tables_[node.children[0]];
    const Player u = node.vertex;
    const auto p = position(child_bag, u);
    std::vector<char> linked(child_bag.size(), 0);
    for (std::size_t j = 0; j < child_bag.size(); ++j) {
      linked[j] = j != p && game_.graph().adjacent(u, child_bag[j]);
    }
    const Mask low = (Mask{1} << p) - 1;

    Builder builder(tables_[i]);
    for (std::uint32_t s = 0; s < child.states.size(); ++s) {
      const State& cs = child.states[s];
      const bool invests = (cs.invest >> p) & 1U;
      std::size_t count = cs.counts[p] + (invests ? 1 : 0);
      for (std::size_t j = 0; j < child_bag.size(); ++j) {
        if (linked[j] && ((cs.invest >> j) & 1U)) ++count;
      }
      auto term = rule_.on_forget(u, invests, count);
      if (!term) continue;

      State next;
      next.invest = (cs.invest & low) | ((cs.invest >> (p + 1)) << p);
      next.counts.reserve(child_bag.size() - 1);
      for (std::size_t j = 0; j < child_bag.size(); ++j) {
        if (j == p) continue;
        next.counts.push_back(cs.counts[j] + ((invests && linked[j]) ? 1 : 0));
      }
      builder.offer(std::move(next), Alg::add(child.values[s], *term), {s, kNone});
    }
  }

  void join(std::size_t i) {
    const NiceNode& node = ntd_.nodes[i];
    const Table& left = tables_[node.children[0]];
    const Table& right = tables_[node.children[1]];
    std::unordered_map<Mask, std::vector<std::uint32_t>> by_mask;
    for (std::uint32_t r = 0; r < right.states.size(); ++r) {
      by_mask[right.states[r].invest].push_back(r);
    }
    Builder builder(tables_[i]);
    for (std::uint32_t l = 0; l < left.states.size(); ++l) {
      const State& ls = left.states[l];
      const auto match = by_mask.find(ls.invest);
      if (match == by_mask.end()) continue;
      for (std::uint32_t r : match->second) {
        // The two subtrees share only the bag, so outside counts add up.
        State next{ls.invest, ls.counts};
        const auto& rc = right.states[r].counts;
        for (std::size_t j = 0; j < rc.size(); ++j) next.counts[j] += rc[j];
        builder.offer(std::move(next), Alg::add(left.values[l], right.values[r]), {l, r});
      }
    }
  }

  const Game& game_;
  const NiceTreeDecomposition& ntd_;
  Rule rule_;
  std::vector<Table> tables_;
};

void require_valid(const Game& game, const NiceTreeDecomposition& ntd) {
  if (const auto check = validate_nice(ntd, game.graph()); !check) {
    throw std::invalid_argument("invalid decomposition: " + check.message);
  }
  if (ntd.width() + 1 > 64) {
    throw std::invalid_argument("bags larger than 64 vertices are not supported");
  }
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

NiceTreeDecomposition default_decomposition(const Game& game) {
  return to_nice(heuristic_decomposition(game.graph()), game.graph());
}

}  // namespace

bool stable(const Game& game, Player v, bool invests, std::size_t count) {
  const auto g = game.externality_table(v);
  const Rational& c = game.cost(v);
  if (invests) return g[count] - c >= g[count - 1];
  return g[count] >= g[count + 1] - c;
}

SolveReport solve_psne(const Game& game, const NiceTreeDecomposition& ntd) {
  require_valid(game, ntd);
  const auto start = Clock::now();
  SolveReport report;
  report.algorithm = "treewidth";
  NiceDp<PsneRule> dp(game, ntd, PsneRule(game));
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

SolveReport solve_usw(const Game& game, const NiceTreeDecomposition& ntd) {
  require_valid(game, ntd);
  const auto start = Clock::now();
  SolveReport report;
  report.algorithm = "treewidth";
  NiceDp<UswRule> dp(game, ntd, UswRule(game));
  auto value = dp.run(report.stats);
  if (!value) throw std::logic_error("utilitarian table has no root entry");
  report.status = SolveStatus::solved;
  report.value = std::move(*value);
  report.profile = dp.extract();
  report.stats.elapsed_ms = elapsed_ms(start);
  return report;
}

SolveReport solve_esw(const Game& game, const NiceTreeDecomposition& ntd) {
  if (game.player_count() == 0) {
    throw std::invalid_argument("egalitarian welfare of a game without players");
  }
  require_valid(game, ntd);
  const auto start = Clock::now();
  SolveReport report;
  report.algorithm = "treewidth";
  const auto candidates = attainable_payoffs(game);
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    NiceDp<EswRule> dp(game, ntd, EswRule(game, candidates[mid]));
    if (dp.run(report.stats)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  NiceDp<EswRule> dp(game, ntd, EswRule(game, candidates[lo]));
  if (!dp.run(report.stats)) throw std::logic_error("lowest egalitarian threshold infeasible");
  report.status = SolveStatus::solved;
  report.profile = dp.extract();
  report.value = candidates[lo];
  report.stats.elapsed_ms = elapsed_ms(start);
  return report;
}

SolveReport solve_psne(const Game& game) { return solve_psne(game, default_decomposition(game)); }
SolveReport solve_usw(const Game& game) { return solve_usw(game, default_decomposition(game)); }
SolveReport solve_esw(const Game& game) { return solve_esw(game, default_decomposition(game)); }

}  // namespace bnpg::treewidth
