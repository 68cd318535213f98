#include <benchmark/benchmark.h>

#include "bnpg/ccforest.hpp"
#include "bnpg/generators.hpp"
#include "bnpg/oracle.hpp"
#include "bnpg/treewidth.hpp"

namespace {

bnpg::Game make_game(bnpg::Family family, std::size_t n, std::size_t width = 2) {
  bnpg::GameSpec spec;
  spec.family = family;
  spec.n = n;
  spec.width = width;
  spec.p = 0.9;
  spec.externality = bnpg::ExternalityKind::monotone;
  spec.cost = bnpg::CostKind::unit;
  spec.seed = 2024;
  return bnpg::gen_random_game(spec);
}

void BM_CcForestPsneCaterpillar(benchmark::State& state) {
  const auto game = make_game(bnpg::Family::caterpillar, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bnpg::ccforest::solve_psne(game));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CcForestPsneCaterpillar)->RangeMultiplier(2)->Range(250, 2000)->Complexity();

void BM_CcForestUswCaterpillar(benchmark::State& state) {
  const auto game = make_game(bnpg::Family::caterpillar, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bnpg::ccforest::solve_usw(game));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CcForestUswCaterpillar)->RangeMultiplier(2)->Range(250, 2000)->Complexity();

void BM_CcForestEswTwinTree(benchmark::State& state) {
  const auto game =
      make_game(bnpg::Family::twin_expanded_tree, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bnpg::ccforest::solve_esw(game));
}
BENCHMARK(BM_CcForestEswTwinTree)->RangeMultiplier(2)->Range(16, 128);

void BM_TreewidthPsnePath(benchmark::State& state) {
  const auto game = make_game(bnpg::Family::path, static_cast<std::size_t>(state.range(0)));
  const auto nice = bnpg::to_nice(bnpg::heuristic_decomposition(game.graph()), game.graph());
  for (auto _ : state) benchmark::DoNotOptimize(bnpg::treewidth::solve_psne(game, nice));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreewidthPsnePath)->RangeMultiplier(2)->Range(250, 2000)->Complexity();

void BM_TreewidthUswBoundedWidth(benchmark::State& state) {
  const auto game = make_game(bnpg::Family::bounded_tw, 30, static_cast<std::size_t>(state.range(0)));
  const auto nice = bnpg::to_nice(bnpg::heuristic_decomposition(game.graph()), game.graph());
  for (auto _ : state) benchmark::DoNotOptimize(bnpg::treewidth::solve_usw(game, nice));
}
BENCHMARK(BM_TreewidthUswBoundedWidth)->DenseRange(1, 3);

void BM_OracleMaxUsw(benchmark::State& state) {
  const auto game = make_game(bnpg::Family::gnp, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bnpg::oracle::max_usw(game));
}
BENCHMARK(BM_OracleMaxUsw)->DenseRange(10, 16, 2);

}  // namespace
BENCHMARK_MAIN();
