#include "bnpg_cli/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "bnpg/ccforest.hpp"
#include "bnpg/critical_clique.hpp"
#include "bnpg/generators.hpp"
#include "bnpg/instance_io.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/parse_error.hpp"
#include "bnpg/reductions.hpp"
#include "bnpg/tree_decomposition.hpp"
#include "bnpg/treewidth.hpp"

namespace bnpg::cli {
namespace {

enum class Problem { psne, usw, esw };

struct RunConfig {
  std::string input = "-";
  std::string algo = "auto";
  std::string td_path;
  bool machine = false;
  std::size_t oracle_limit = 20;
  std::size_t width_cap = 8;
};

// Thrown for unreadable input; maps to exit 1.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  buffer << file.rdbuf();
  return buffer.str();
}

std::string fixed3(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 3);
  return {buf, r.ptr};
}

std::string profile_body(const Profile& profile) {
  const auto line = serialize_profile(profile);
  return line.substr(line.find(':') + 2);
}

SolveReport run_brute(Problem problem, const Game& game, const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  oracle::OracleLimits limits;
  limits.max_players = config.oracle_limit;
  SolveReport report;
  report.algorithm = "brute";
  if (problem == Problem::psne) {
    const auto all = oracle::enum_psne(game, limits);
    if (all.empty()) {
      report.status = SolveStatus::no_psne;
      report.message = "no pure-strategy Nash equilibrium";
    } else {
      report.status = SolveStatus::solved;
      report.profile = all.front();
    }
  } else {
    auto best = problem == Problem::usw ? oracle::max_usw(game, limits)
                                        : oracle::max_esw(game, limits);
    report.status = SolveStatus::solved;
    report.profile = std::move(best.profile);
    report.value = std::move(best.value);
  }
  report.stats.passes = 1;
  report.stats.elapsed_ms = std::chrono::duration<double, std::milli>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

SolveReport run_ccforest(Problem problem, const Game& game) {
  switch (problem) {
    case Problem::psne: return ccforest::solve_psne(game);
    case Problem::usw: return ccforest::solve_usw(game);
    case Problem::esw: return ccforest::solve_esw(game);
  }
  throw std::logic_error("unknown problem");
}

SolveReport run_treewidth(Problem problem, const Game& game, const NiceTreeDecomposition& ntd) {
  switch (problem) {
    case Problem::psne: return treewidth::solve_psne(game, ntd);
    case Problem::usw: return treewidth::solve_usw(game, ntd);
    case Problem::esw: return treewidth::solve_esw(game, ntd);
  }
  throw std::logic_error("unknown problem");
}

NiceTreeDecomposition load_decomposition(const RunConfig& config, const Game& game,
                                         std::istream& in) {
  const TreeDecomposition td = config.td_path.empty()
                                   ? heuristic_decomposition(game.graph())
                                   : read_pace(read_source(config.td_path, in));
  return to_nice(td, game.graph());
}

SolveReport dispatch(Problem problem, const Game& game, const RunConfig& config,
                     std::istream& in) {
  if (config.algo == "brute") return run_brute(problem, game, config);
  if (config.algo == "ccforest") return run_ccforest(problem, game);
  if (config.algo == "treewidth") {
    return run_treewidth(problem, game, load_decomposition(config, game, in));
  }

  if (is_forest(build_cc_graph(game.graph()))) return run_ccforest(problem, game);
  const auto ntd = load_decomposition(config, game, in);
  if (ntd.width() <= config.width_cap) return run_treewidth(problem, game, ntd);
  if (game.player_count() <= config.oracle_limit) return run_brute(problem, game, config);

  SolveReport report;
  report.algorithm = "auto";
  report.message = "critical clique graph is not a forest, decomposition width " +
                   std::to_string(ntd.width()) + " exceeds cap " +
                   std::to_string(config.width_cap) + ", and " +
                   std::to_string(game.player_count()) + " players exceed the oracle limit " +
                   std::to_string(config.oracle_limit);
  return report;
}

int print_report(Problem problem, const SolveReport& report, bool machine, std::ostream& out) {
  const char* name = problem == Problem::psne ? "psne" : problem == Problem::usw ? "usw" : "esw";
  std::string psne = "-";
  if (problem == Problem::psne && report.status != SolveStatus::not_applicable) {
    psne = report.status == SolveStatus::solved ? "yes" : "no";
  }
  if (machine) {
    out << "problem=" << name << '\n'
        << "status=" << to_string(report.status) << '\n'
        << "algorithm=" << report.algorithm << '\n'
        << "psne=" << psne << '\n'
        << "value=" << (report.value ? to_string(*report.value) : "-") << '\n'
        << "profile=" << (report.profile ? profile_body(*report.profile) : "") << '\n'
        << "message=" << report.message << '\n'
        << "elapsed_ms=" << fixed3(report.stats.elapsed_ms) << '\n'
        << "table_entries=" << report.stats.table_entries << '\n'
        << "peak_node_entries=" << report.stats.peak_node_entries << '\n'
        << "passes=" << report.stats.passes << '\n';
  } else {
    if (report.status == SolveStatus::not_applicable) {
      out << "not applicable: " << report.message << '\n';
    } else {
      if (problem == Problem::psne) out << "PSNE: " << psne << '\n';
      if (report.value) out << name << " = " << to_string(*report.value) << '\n';
      if (report.profile) out << serialize_profile(*report.profile) << '\n';
    }
    out << "algorithm: " << report.algorithm << '\n'
        << "elapsed: " << fixed3(report.stats.elapsed_ms) << " ms\n"
        << "table entries: " << report.stats.table_entries << " (peak "
        << report.stats.peak_node_entries << ", passes " << report.stats.passes << ")\n";
  }
  switch (report.status) {
    case SolveStatus::solved: return kSolved;
    case SolveStatus::no_psne: return kNoPsne;
    case SolveStatus::not_applicable: return kNotApplicable;
  }
  return kNotApplicable;
}

int cmd_verify(const Game& game, const Profile& profile, bool machine, std::ostream& out) {
  const bool equilibrium = is_psne(game, profile);
  const Rational total = usw(game, profile);
  const std::optional<Rational> minimum =
      game.player_count() ? std::optional(esw(game, profile)) : std::nullopt;
  if (machine) {
    out << "profile=" << profile_body(profile) << '\n';
    for (Player v = 0; v < game.player_count(); ++v) {
      out << "payoff." << v << '=' << to_string(payoff(game, profile, v)) << '\n'
          << "gain." << v << '=' << to_string(deviation_gain(game, profile, v)) << '\n';
    }
    out << "psne=" << (equilibrium ? "true" : "false") << '\n'
        << "usw=" << to_string(total) << '\n'
        << "esw=" << (minimum ? to_string(*minimum) : "-") << '\n';
    return kSolved;
  }
  out << serialize_profile(profile) << '\n';
  for (Player v = 0; v < game.player_count(); ++v) {
    out << "player " << v << ": " << (profile.invests(v) ? "invests" : "abstains")
        << ", payoff " << to_string(payoff(game, profile, v)) << ", deviation gain "
        << to_string(deviation_gain(game, profile, v)) << '\n';
  }
  out << "psne: " << (equilibrium ? "true" : "false") << '\n'
      << "usw = " << to_string(total) << '\n'
      << "esw = " << (minimum ? to_string(*minimum) : "-") << '\n';
  return kSolved;
}

int cmd_ccgraph(const Game& game, std::ostream& out) {
  const auto cc = build_cc_graph(game.graph());
  out << "cliques: " << cc.clique_count() << '\n';
  for (std::size_t i = 0; i < cc.clique_count(); ++i) {
    out << "clique " << i << ":";
    for (Player v : cc.cliques[i]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& [a, b] : cc.cc_edges) out << "edge " << a << ' ' << b << '\n';
  out << "forest: " << (is_forest(cc) ? "yes" : "no") << '\n';
  return kSolved;
}

int cmd_decompose(const Game& game, const RunConfig& config, std::istream& in,
                  std::ostream& out) {
  if (config.td_path.empty()) {
    const auto td = heuristic_decomposition(game.graph());
    out << "c width " << td.width() << '\n' << write_pace(td);
    return kSolved;
  }
  const auto td = read_pace(read_source(config.td_path, in));
  const auto check = validate(td, game.graph());
  if (!check) {
    out << "invalid: " << to_string(check.axiom) << ": " << check.message << '\n';
    return kInputError;
  }
  const auto ntd = to_nice(td, game.graph());
  out << "valid: width " << td.width() << ", nice nodes " << ntd.nodes.size() << '\n';
  return kSolved;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact solvers for binary networked public goods games"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_solve_options = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "instance file, or - for stdin");
    sub->add_option("--algo", config.algo, "auto | brute | ccforest | treewidth")
        ->check(CLI::IsMember({"auto", "brute", "ccforest", "treewidth"}));
    sub->add_option("--td", config.td_path, "PACE .td decomposition of the network");
    sub->add_flag("--machine", config.machine, "key=value output");
    sub->add_option("--oracle-limit", config.oracle_limit, "largest n for brute force");
    sub->add_option("--width-cap", config.width_cap, "largest width auto will try");
  };
  auto* psne = app.add_subcommand("psne", "find a pure-strategy Nash equilibrium");
  auto* usw = app.add_subcommand("usw", "maximize utilitarian welfare");
  auto* esw = app.add_subcommand("esw", "maximize egalitarian welfare");
  for (auto* sub : {psne, usw, esw}) add_solve_options(sub);

  std::string profile_text;
  std::string profile_path;
  auto* verify = app.add_subcommand("verify", "payoffs, deviation gains and welfare of a profile");
  verify->add_option("input", config.input, "instance file, or - for stdin");
  auto* profile_opt = verify->add_option("--profile", profile_text, "e.g. \"0 2\" or \"-\"");
  verify->add_option("--profile-file", profile_path, "file holding a profile line")
      ->excludes(profile_opt);
  verify->add_flag("--machine", config.machine, "key=value output");

  std::string kind;
  std::size_t kappa = 0;
  auto* reduce = app.add_subcommand("reduce", "build a reduction instance from a graph");
  reduce->add_option("kind", kind, "3ris | clique | rbds")
      ->required()
      ->check(CLI::IsMember({"3ris", "clique", "rbds"}));
  reduce->add_option("input", config.input, "graph file (n / e / red lines), or -");
  reduce->add_option("--kappa", kappa, "clique size or dominating set budget");

  std::string family;
  std::string g_kind = "monotone";
  std::string cost_kind = "unit";
  GameSpec spec;
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("family", family, "path | cycle | clique | tree | caterpillar | "
                                    "twin-expanded-tree | gnp | bounded-tw")
      ->required();
  gen->add_option("n", spec.n, "players (tree nodes for twin-expanded-tree)")->required();
  gen->add_option("--g", g_kind, "monotone | arbitrary | homogeneous | zero");
  gen->add_option("--cost", cost_kind, "unit | integer | rational | zero");
  gen->add_option("--seed", spec.seed, "random seed");
  gen->add_option("--p", spec.p, "edge probability");
  gen->add_option("--width", spec.width, "width bound for bounded-tw");
  gen->add_option("--mult", spec.multiplicities, "clique sizes for twin-expanded-tree");
  gen->add_option("--max-value", spec.max_value, "largest drawn integer");

  auto* ccgraph = app.add_subcommand("ccgraph", "print the critical clique graph");
  ccgraph->add_option("input", config.input, "instance file, or -");
  auto* decompose = app.add_subcommand("decompose", "min-fill decomposition, or check --td");
  decompose->add_option("input", config.input, "instance file, or -");
  decompose->add_option("--td", config.td_path, "PACE .td file to validate");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSolved : kInputError;
  }

  try {
    if (*gen) {
      spec.family = parse_family(family);
      spec.externality = parse_externality_kind(g_kind);
      spec.cost = parse_cost_kind(cost_kind);
      out << serialize_instance(gen_random_game(spec));
      return kSolved;
    }
    if (*reduce) {
      const auto source = parse_graph(read_source(config.input, in));
      ReductionOutput result;
      if (kind == "3ris") {
        result = reduce_3ris(source.graph);
      } else if (kind == "clique") {
        result = reduce_clique_to_uswc(source.graph, kappa);
      } else {
        result = reduce_rbds_to_eswc(source, kappa);
      }
      for (const auto& w : result.warnings) err << "warning: " << w << '\n';
      out << serialize_reduction(result);
      return kSolved;
    }

    const Game game = parse_instance(read_source(config.input, in));
    if (*verify) {
      std::string text = profile_path.empty() ? profile_text : read_source(profile_path, in);
      if (text.find("profile:") == std::string::npos) text = "profile: " + text;
      return cmd_verify(game, parse_profile(text, game.player_count()), config.machine, out);
    }
    if (*ccgraph) return cmd_ccgraph(game, out);
    if (*decompose) return cmd_decompose(game, config, in, out);

    const Problem problem = *psne ? Problem::psne : *usw ? Problem::usw : Problem::esw;
    return print_report(problem, dispatch(problem, game, config, in), config.machine, out);
  } catch (const oracle::LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kNotApplicable;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace bnpg::cli
