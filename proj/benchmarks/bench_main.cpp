/* Microbenchmarks for the hot paths: lattice point enumeration, test-set
 * width minimization, semigroup factorizations, and range decomposition. */

#include "aw/arithmetic_range.hpp"
#include "aw/lattice_points.hpp"
#include "aw/polytope.hpp"
#include "aw/semigroup.hpp"
#include "aw/width_min.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace aw;

RationalPolytope quad() {
  auto pt = [](const char* a, const char* b) {
    return RatVec{rat_from_string(a), rat_from_string(b)};
  };
  return make_polytope({pt("0", "0"), pt("1/3", "0"), pt("0", "1/2"),
                        pt("1/2", "1/3")});
}

void bm_enumerate(benchmark::State& state) {
  const RationalPolytope p = dilate(quad(), Int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_lattice_points(p));
}
BENCHMARK(bm_enumerate)->Arg(8)->Arg(32)->Arg(128);

void bm_arithmetic_width(benchmark::State& state) {
  const RationalPolytope p = dilate(quad(), Int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(arithmetic_width(p));
}
BENCHMARK(bm_arithmetic_width)->Arg(8)->Arg(16)->Arg(32);

void bm_factorizations(benchmark::State& state) {
  const NumericalSemigroup s =
      make_semigroup({Int(22), Int(79), Int(91), Int(190)});
  const Int n(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorizations(s, n));
}
BENCHMARK(bm_factorizations)->Arg(1000)->Arg(4180);

void bm_decompose(benchmark::State& state) {
  const NumericalSemigroup s = make_semigroup({Int(6), Int(9), Int(20)});
  const std::vector<Int> lengths = length_set(s, Int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_almost_ap(lengths));
}
BENCHMARK(bm_decompose)->Arg(600)->Arg(6000);

void bm_make_polytope(benchmark::State& state) {
  std::vector<RatVec> pts;
  for (long i = 0; i < 12; ++i)
    pts.push_back({make_rat(Int(i * i - 7), Int(3)), make_rat(Int(5 - i), Int(4)),
                   make_rat(Int(2 * i + 1), Int(6))});
  for (auto _ : state) benchmark::DoNotOptimize(make_polytope(pts));
}
BENCHMARK(bm_make_polytope);

}  // namespace

BENCHMARK_MAIN();
