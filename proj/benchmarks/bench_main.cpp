#include <benchmark/benchmark.h>

#include "invlim/suites.hpp"

namespace {

using namespace invlim;

IntMatrix random_matrix(SplitMix64& rng, std::size_t n, std::int64_t bound) {
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.in_range(-bound, bound);
  return a;
}

void BM_snf(benchmark::State& state) {
  SplitMix64 rng(17);
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 32; ++i)
    inputs.push_back(random_matrix(rng, state.range(0), 30));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(snf(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_snf)->Arg(3)->Arg(5)->Arg(8);

void BM_presentation_build(benchmark::State& state) {
  SplitMix64 rng(18);
  IntMatrix rel(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) rel(i, j) = rng.in_range(-60, 60);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_injective_presentation(rel, 3));
}
BENCHMARK(BM_presentation_build);

void BM_hom_apply(benchmark::State& state) {
  InjectivePresentation pres = build_injective_presentation(
      [] {
        IntMatrix rel(2, 2);
        rel(0, 0) = 2;
        rel(1, 1) = 12;
        return rel;
      }(),
      2);
  Element x = random_element(pres.m_shape, 19, 4, Integer(30));
  for (auto _ : state) benchmark::DoNotOptimize(hom_apply(pres.f, x));
}
BENCHMARK(BM_hom_apply);

void BM_intersection_member(benchmark::State& state) {
  SubmodSystem sys(build_injective_presentation(
      [] {
        IntMatrix rel(1, 1);
        rel(0, 0) = 6;
        return rel;
      }(),
      1));
  Element x = sys.make_element(
      generator_vector_image(sys.presentation(), {Integer(5)}), {});
  for (auto _ : state) benchmark::DoNotOptimize(intersection_member(sys, x));
}
BENCHMARK(BM_intersection_member);

void BM_ladder(benchmark::State& state) {
  ModuleShape s({Family{"v", Atom::rationals_mod_one(), Extent::finite(1)}});
  std::size_t k = state.range(0);
  InverseChain inv(std::vector<ModuleShape>(k + 1, s),
                   std::vector<Hom>(k, hom_mult_int(s, Integer(2))), 1);
  DirectChain dir = big_div_chain({Integer(2)}, k);
  Element x = single_coord_element(s, 0, 0, Rational(Integer(1), Integer(3)));
  for (auto _ : state)
    benchmark::DoNotOptimize(run_ladder(ladder_start(x), inv, dir, k, 7));
}
BENCHMARK(BM_ladder)->Arg(2)->Arg(4)->Arg(8);

void BM_seq_divisibility(benchmark::State& state) {
  SplitMix64 rng(23);
  std::vector<Rational> head;
  for (int i = 0; i < 6; ++i)
    head.emplace_back(Integer(rng.in_range(-30, 30)),
                      Integer(rng.in_range(1, 10)));
  EventuallyIntegerSeq seq(head, Integer(12));
  for (auto _ : state)
    benchmark::DoNotOptimize(limit_seq_divisibility(seq, Integer(6)));
}
BENCHMARK(BM_seq_divisibility);

}  // namespace

BENCHMARK_MAIN();
