#include <benchmark/benchmark.h>

#include "gamma0fd/domain.hpp"
#include "gamma0fd/render.hpp"

using namespace gamma0fd;

namespace {

void bm_width_table(benchmark::State& state) {
  const modulus n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_width_table(n));
}
BENCHMARK(bm_width_table)->Arg(120)->Arg(720)->Arg(1890)->Arg(5040);

void bm_build_cosets(benchmark::State& state) {
  const modulus n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_cosets(n));
}
BENCHMARK(bm_build_cosets)->Arg(120)->Arg(360)->Arg(1890);

void bm_glue(benchmark::State& state) {
  const coset_table t = build_cosets(modulus(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(glue(t));
}
BENCHMARK(bm_glue)->Arg(60)->Arg(120)->Arg(360);

void bm_genus(benchmark::State& state) {
  const coset_table t = build_cosets(modulus(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_genus(t));
}
BENCHMARK(bm_genus)->Arg(60)->Arg(120)->Arg(360);

void bm_render(benchmark::State& state) {
  const coset_table t = build_cosets(modulus(state.range(0)));
  const auto pairs = glue(t);
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(t, pairs));
}
BENCHMARK(bm_render)->Arg(12)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
