#include <benchmark/benchmark.h>

#include <vector>

#include "wmc/formula.hpp"
#include "wmc/graph.hpp"
#include "wmc/io.hpp"
#include "wmc/oracle.hpp"
#include "wmc/path_decomposition.hpp"
#include "wmc/pathwidth_dp.hpp"
#include "wmc/reduce.hpp"
#include "wmc/solver.hpp"

namespace {

wmc::Instance seeded(int vars, int clauses, int width, std::uint64_t seed) {
  wmc::GenSpec spec;
  spec.vars = vars;
  spec.clauses = clauses;
  spec.width = width;
  spec.max_weight = 5;
  spec.seed = seed;
  return wmc::parse_dimacs(wmc::generate_random(spec)).instance;
}

// Ring of 2-clauses with negated chords, scaled by repetition: reduced,
// degree <= 3, straight into the primal sweep.
wmc::Formula chorded_ring(int n) {
  std::vector<std::vector<wmc::Lit>> cls;
  for (int i = 1; i <= n; ++i) cls.push_back({i, i % n + 1});
  for (int i = 1; i + n / 2 <= n; i += 2) cls.push_back({-i, -(i + n / 2)});
  return wmc::make_formula(cls);
}

// Closed chain of 3-clauses overlapping in one variable each: reduced,
// unbranchable, handled by the dual sweep.
wmc::Formula triangle_ring(int clauses) {
  std::vector<std::vector<wmc::Lit>> cls;
  int n = 2 * clauses;
  for (int i = 0; i < clauses; ++i) {
    cls.push_back({2 * i + 1, 2 * i + 2, (2 * i + 2) % n + 1});
  }
  return wmc::make_formula(cls);
}

void BM_ReduceFixpoint(benchmark::State& state) {
  wmc::Instance inst =
      seeded(static_cast<int>(state.range(0)), 3 * state.range(0), 3, 97);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmc::reduce_fixpoint(inst));
  }
}
BENCHMARK(BM_ReduceFixpoint)->Arg(30)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_BruteOracle(benchmark::State& state) {
  wmc::Instance inst =
      seeded(static_cast<int>(state.range(0)), 2 * state.range(0), 3, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        wmc::brute_wmc(inst.formula, inst.weights, 30));
  }
}
BENCHMARK(BM_BruteOracle)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Alg2Cnf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  wmc::Instance inst = seeded(n, 5 * n / 2, 2, 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmc::alg2cnf(inst));
  }
}
BENCHMARK(BM_Alg2Cnf)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Alg3Cnf(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  wmc::Instance inst = seeded(n, 2 * n, 3, 59);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmc::alg3cnf(inst));
  }
}
BENCHMARK(BM_Alg3Cnf)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_PrimalSweep(benchmark::State& state) {
  wmc::Formula f = chorded_ring(static_cast<int>(state.range(0)));
  wmc::PathDecomposition pd = wmc::heuristic_decompose(wmc::primal_graph(f));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmc::primal_count(f, wmc::WeightFn{}, pd));
  }
}
BENCHMARK(BM_PrimalSweep)->Arg(40)->Arg(80)->Unit(benchmark::kMicrosecond);

void BM_DualSweep(benchmark::State& state) {
  wmc::Formula f = triangle_ring(static_cast<int>(state.range(0)));
  wmc::PathDecomposition pd = wmc::heuristic_decompose(wmc::dual_graph(f));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmc::dual_count(f, wmc::WeightFn{}, pd));
  }
}
BENCHMARK(BM_DualSweep)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_HeuristicDecompose(benchmark::State& state) {
  wmc::Graph g = wmc::primal_graph(chorded_ring(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wmc::heuristic_decompose(g));
  }
}
BENCHMARK(BM_HeuristicDecompose)
    ->Arg(30)
    ->Arg(60)
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
