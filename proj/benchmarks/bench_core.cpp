#include <benchmark/benchmark.h>

#include "eqrw/dataset.hpp"
#include "eqrw/interp.hpp"
#include "eqrw/prover.hpp"

using namespace eqrw;

namespace {

const char* kProgA = "( d *s ( ( ( ns e ) /s a ) -s c ) )";
const char* kProgB = "( ( d *s ( ( ns e ) /s a ) ) -s ( c *s d ) )";

void BM_Parse(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse(kProgA));
  }
}
BENCHMARK(BM_Parse);

void BM_Print(benchmark::State& state) {
  Expr e = parse(kProgA);
  for (auto _ : state) {
    benchmark::DoNotOptimize(print(e));
  }
}
BENCHMARK(BM_Print);

void BM_ApplyAt(benchmark::State& state) {
  Expr e = parse(kProgA);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_at(e, {}, Category::DistributeRight));
  }
}
BENCHMARK(BM_ApplyAt);

void BM_Check(benchmark::State& state) {
  Expr a = parse(kProgA);
  Expr b = parse(kProgB);
  RewriteSequence seq = parse_sequence("DistributeRight right Commute");
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(a, seq, b));
  }
}
BENCHMARK(BM_Check);

void BM_GenSrc(benchmark::State& state) {
  GenConfig cfg;
  Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_src(cfg, rng));
  }
}
BENCHMARK(BM_GenSrc);

void BM_GenTgt(benchmark::State& state) {
  GenConfig cfg;
  Rng rng(2);
  Expr a = gen_src(cfg, rng);
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng sample_rng(derive_stream(2, i++));
    benchmark::DoNotOptimize(gen_tgt(cfg, a, sample_rng));
  }
}
BENCHMARK(BM_GenTgt);

void BM_Eval(benchmark::State& state) {
  Rng rng(3);
  Valuation val = sample_valuation(rng);
  Expr e = parse("( tm ( ( A +m B ) *m ( im C ) ) )");
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(e, val));
  }
}
BENCHMARK(BM_Eval);

void BM_SampleValuation(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_valuation(rng));
  }
}
BENCHMARK(BM_SampleValuation);

void BM_ProveTwoSteps(benchmark::State& state) {
  Expr a = parse(kProgA);
  Expr b = parse(kProgB);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prove(a, b));
  }
}
BENCHMARK(BM_ProveTwoSteps);

void BM_DatasetBuild1k(benchmark::State& state) {
  GenConfig cfg;
  cfg.rng_seed = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build(cfg, PruneRules{}, 1000));
  }
}
BENCHMARK(BM_DatasetBuild1k)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
