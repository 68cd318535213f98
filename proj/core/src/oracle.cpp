#include "bnpg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace bnpg::oracle {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

void check_limits(std::size_t n, const OracleLimits& limits) {
  if (limits.max_players < 1) throw std::invalid_argument("oracle max_players must be >= 1");
  if (n > limits.max_players || n >= 63) {
    throw LimitExceeded("exhaustive search over " + std::to_string(n) +
                        " players exceeds the oracle limit of " +
                        std::to_string(limits.max_players));
  }
}

class Deadline {
 public:
  explicit Deadline(const OracleLimits& limits) {
    if (limits.time_budget) end_ = Clock::now() + *limits.time_budget;
  }
  void poll(Mask step) const {
    if (end_ && (step & 0xFFF) == 0 && Clock::now() > *end_) {
      throw LimitExceeded("oracle time budget exhausted");
    }
  }

 private:
  std::optional<Clock::time_point> end_;
};

std::vector<Mask> closed_neighbourhoods(const Graph& graph) {
  std::vector<Mask> out(graph.player_count());
  for (Player v = 0; v < graph.player_count(); ++v) {
    out[v] = Mask{1} << v;
    for (Player w : graph.neighbors(v)) out[v] |= Mask{1} << w;
  }
  return out;
}

std::vector<Player> members(Mask mask) {
  std::vector<Player> out;
  for (Player v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

// Walks all profiles in Gray-code order, keeping each player's closed
// investor count current. `visit(mask, counts)` sees every profile once.
template <class Visit>
void for_each_profile(const Game& game, const OracleLimits& limits, Visit&& visit) {
  const std::size_t n = game.player_count();
  check_limits(n, limits);
  const Graph& graph = game.graph();
  const Deadline deadline(limits);
  std::vector<std::size_t> counts(n, 0);
  Mask mask = 0;
  visit(mask, counts, std::optional<Player>{});
  const Mask total = Mask{1} << n;
  for (Mask step = 1; step < total; ++step) {
    deadline.poll(step);
    const auto j = static_cast<Player>(std::countr_zero(step));
    mask ^= Mask{1} << j;
    const bool now = (mask >> j) & 1U;
    auto bump = [&](Player w) { counts[w] = now ? counts[w] + 1 : counts[w] - 1; };
    bump(j);
    for (Player w : graph.neighbors(j)) bump(w);
    visit(mask, counts, std::optional<Player>{j});
  }
}

// payoff[v][2 * count + invests]
std::vector<std::vector<Rational>> payoff_table(const Game& game) {
  std::vector<std::vector<Rational>> table(game.player_count());
  for (Player v = 0; v < game.player_count(); ++v) {
    const auto g = game.externality_table(v);
    table[v].resize(2 * g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      table[v][2 * k] = g[k];
      table[v][2 * k + 1] = g[k] - game.cost(v);
    }
  }
  return table;
}

}  // namespace

std::vector<Profile> enum_psne(const Game& game, const OracleLimits& limits) {
  const std::size_t n = game.player_count();
  check_limits(n, limits);
  // unstable[v][2 * count + invests]: v strictly gains by flipping.
  std::vector<std::vector<char>> unstable(n);
  for (Player v = 0; v < n; ++v) {
    const auto g = game.externality_table(v);
    const Rational& c = game.cost(v);
    unstable[v].assign(2 * g.size(), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      // Not investing with k investors around: investing gives g(k+1) - c.
      if (k + 1 < g.size()) unstable[v][2 * k] = g[k + 1] - c > g[k];
      // Investing with k investors (self included): abstaining gives g(k-1).
      if (k >= 1) unstable[v][2 * k + 1] = g[k - 1] > g[k] - c;
    }
  }

  std::vector<Mask> found;
  for_each_profile(game, limits, [&](Mask mask, const std::vector<std::size_t>& counts, auto) {
    for (Player v = 0; v < n; ++v) {
      if (unstable[v][2 * counts[v] + ((mask >> v) & 1U)]) return;
    }
    found.push_back(mask);
  });
  std::sort(found.begin(), found.end());
  std::vector<Profile> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(Profile::from_mask(n, m));
  return out;
}

WelfareOptimum max_usw(const Game& game, const OracleLimits& limits) {
  const std::size_t n = game.player_count();
  check_limits(n, limits);
  const auto table = payoff_table(game);
  const Graph& graph = game.graph();

  std::vector<Rational> current(n);
  Rational total = 0;
  Rational best;
  Mask best_mask = 0;
  bool have = false;
  for_each_profile(game, limits,
                   [&](Mask mask, const std::vector<std::size_t>& counts,
                       std::optional<Player> flipped) {
                     auto refresh = [&](Player w) {
                       const Rational& next = table[w][2 * counts[w] + ((mask >> w) & 1U)];
                       total += next - current[w];
                       current[w] = next;
                     };
                     if (!flipped) {
                       for (Player v = 0; v < n; ++v) refresh(v);
                     } else {
                       refresh(*flipped);
                       for (Player w : graph.neighbors(*flipped)) refresh(w);
                     }
                     if (!have || total > best || (total == best && mask < best_mask)) {
                       best = total;
                       best_mask = mask;
                       have = true;
                     }
                   });
  return {Profile::from_mask(n, best_mask), best};
}

WelfareOptimum max_esw(const Game& game, const OracleLimits& limits) {
  const std::size_t n = game.player_count();
  check_limits(n, limits);
  if (n == 0) throw std::invalid_argument("egalitarian welfare of a game without players");
  const auto table = payoff_table(game);

  const Rational* best = nullptr;
  Mask best_mask = 0;
  for_each_profile(game, limits, [&](Mask mask, const std::vector<std::size_t>& counts, auto) {
    const Rational* low = nullptr;
    for (Player v = 0; v < n; ++v) {
      const Rational& p = table[v][2 * counts[v] + ((mask >> v) & 1U)];
      if (low == nullptr || p < *low) low = &p;
    }
    if (best == nullptr || *low > *best || (*low == *best && mask < best_mask)) {
      best = low;
      best_mask = mask;
    }
  });
  return {Profile::from_mask(n, best_mask), *best};
}

std::optional<std::vector<Player>> find_3regular_induced(const Graph& graph,
                                                         const OracleLimits& limits) {
  const std::size_t n = graph.player_count();
  check_limits(n, limits);
  const auto closed = closed_neighbourhoods(graph);
  const Deadline deadline(limits);
  for (Mask h = 1; h < (Mask{1} << n); ++h) {
    deadline.poll(h);
    bool regular = true;
    for (Mask rest = h; rest != 0 && regular; rest &= rest - 1) {
      const auto v = static_cast<Player>(std::countr_zero(rest));
      regular = std::popcount(closed[v] & h) == 4;
    }
    if (regular) return members(h);
  }
  return std::nullopt;
}

std::optional<std::vector<Player>> find_clique(const Graph& graph, std::size_t k,
                                               const OracleLimits& limits) {
  const std::size_t n = graph.player_count();
  check_limits(n, limits);
  if (k > n) return std::nullopt;
  const auto closed = closed_neighbourhoods(graph);
  const Deadline deadline(limits);
  for (Mask h = 0; h < (Mask{1} << n); ++h) {
    deadline.poll(h);
    if (static_cast<std::size_t>(std::popcount(h)) != k) continue;
    bool clique = true;
    for (Mask rest = h; rest != 0 && clique; rest &= rest - 1) {
      clique = (closed[std::countr_zero(rest)] & h) == h;
    }
    if (clique) return members(h);
  }
  return std::nullopt;
}

std::optional<std::vector<Player>> find_rb_dominating(const RedBlueGraph& instance,
                                                      std::size_t k,
                                                      const OracleLimits& limits) {
  const Graph& graph = instance.graph;
  const std::size_t n = graph.player_count();
  check_limits(n, limits);
  Mask red = 0;
  Mask blue = 0;
  for (Player v = 0; v < n; ++v) (instance.is_red(v) ? red : blue) |= Mask{1} << v;
  std::vector<Mask> open(n, 0);
  for (const Edge& e : graph.edges()) {
    open[e.u] |= Mask{1} << e.v;
    open[e.v] |= Mask{1} << e.u;
  }
  const Deadline deadline(limits);
  for (Mask h = 0; h < (Mask{1} << n); ++h) {
    deadline.poll(h);
    if ((h & ~blue) != 0 || static_cast<std::size_t>(std::popcount(h)) > k) continue;
    Mask dominated = 0;
    for (Mask rest = h; rest != 0; rest &= rest - 1) dominated |= open[std::countr_zero(rest)];
    if ((dominated & red) == red) return members(h);
  }
  return std::nullopt;
}

}  // namespace bnpg::oracle
