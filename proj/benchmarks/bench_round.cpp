#include <benchmark/benchmark.h>

#include "cmabrl/choo.hpp"
#include "cmabrl/cmab_rl.hpp"
#include "cmabrl/gmm_env.hpp"
#include "cmabrl/iup.hpp"

using namespace cmabrl;

namespace {

ContextVector random_context(RngStream& rng, int d) {
  ContextVector x;
  for (int i = 0; i < d; ++i) x.values.push_back(rng.uniform01());
  return x;
}

}  // namespace

static void BM_CmabRlRound(benchmark::State& state) {
  CmabRlConfig cfg;
  cfg.context_dim = 5;
  cfg.arm_dim = 5;
  cfg.relevant_context_dims = 1;
  cfg.relevant_arm_dims = 1;
  cfg.horizon = 100000;
  cfg.confidence_multiplier = 0.001;
  CmabRlPolicy policy(cfg);
  policy.reset(1);
  RngStream rng(2, 0);
  for (auto _ : state) {
    const ContextVector x = random_context(rng, 5);
    const ArmVector a = policy.choose(x);
    policy.learn(x, a, rng.bernoulli(0.4) ? 1.0 : 0.0);
  }
}
BENCHMARK(BM_CmabRlRound);

static void BM_IupRound(benchmark::State& state) {
  IupConfig cfg;
  cfg.context_dim = 5;
  cfg.arm_dim = 5;
  cfg.horizon = 100000;
  cfg.confidence_multiplier = 0.01;
  IupPolicy policy(cfg);
  policy.reset(1);
  RngStream rng(2, 0);
  for (auto _ : state) {
    const ContextVector x = random_context(rng, 5);
    const ArmVector a = policy.choose(x);
    policy.learn(x, a, rng.bernoulli(0.4) ? 1.0 : 0.0);
  }
}
BENCHMARK(BM_IupRound);

static void BM_ChooRound(benchmark::State& state) {
  ChooConfig cfg;
  cfg.context_dim = 5;
  cfg.arm_dim = 5;
  cfg.horizon = 100000;
  cfg.confidence_multiplier = 0.05;
  ChooPolicy policy(cfg);
  policy.reset(1);
  RngStream rng(2, 0);
  for (auto _ : state) {
    const ContextVector x = random_context(rng, 5);
    const ArmVector a = policy.choose(x);
    policy.learn(x, a, rng.bernoulli(0.4) ? 1.0 : 0.0);
  }
}
BENCHMARK(BM_ChooRound);

static void BM_GmmOracle(benchmark::State& state) {
  const GmmEnvironment env(GmmEnvConfig::synthetic_defaults());
  RngStream rng(3, 0);
  for (auto _ : state) {
    const ContextVector x = env.sample_context(rng);
    benchmark::DoNotOptimize(env.oracle_best(x));
  }
}
BENCHMARK(BM_GmmOracle);

static void BM_GenerateArms(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_arms(5, 1, 10));
  }
}
BENCHMARK(BM_GenerateArms);

BENCHMARK_MAIN();
