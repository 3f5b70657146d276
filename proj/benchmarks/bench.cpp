#include <benchmark/benchmark.h>

#include "clarr/arrangement.hpp"
#include "clarr/braid.hpp"
#include "clarr/finquot.hpp"
#include "clarr/monodromy.hpp"
#include "clarr/nilpotent.hpp"
#include "clarr/verify.hpp"

using namespace clarr;

static void BM_ArtinAction(benchmark::State &state) {
  int m = static_cast<int>(state.range(0));
  auto b = garside(m).pow(2);
  for (auto _ : state)
    for (int i = 1; i <= m; ++i) benchmark::DoNotOptimize(artin_act(b, FreeWord::gen(i)));
}
BENCHMARK(BM_ArtinAction)->Arg(6)->Arg(10)->Arg(15);

static void BM_LemmaDelta(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_delta(8));
}
BENCHMARK(BM_LemmaDelta);

static void BM_ZvkA4(benchmark::State &state) {
  auto t = builtin_table("A4");
  for (auto _ : state) benchmark::DoNotOptimize(zvk_presentation(t));
}
BENCHMARK(BM_ZvkA4);

static void BM_Class2Quotient(benchmark::State &state) {
  auto p = an_presentation(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class2_quotient(p));
}
BENCHMARK(BM_Class2Quotient)->Arg(6)->Arg(10)->Arg(13);

static void BM_HomCountS3(benchmark::State &state) {
  auto p = state.range(0) == 4 ? verify::printed_m4() : an_presentation(static_cast<int>(state.range(0)));
  auto S3 = builtin_group("S3");
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(p, S3, HomMode::Epi));
}
BENCHMARK(BM_HomCountS3)->Arg(4)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_HomCountA4(benchmark::State &state) {
  auto p = verify::printed_m4();
  auto A4 = builtin_group("A4");
  for (auto _ : state) benchmark::DoNotOptimize(hom_count(p, A4, HomMode::All));
}
BENCHMARK(BM_HomCountA4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
