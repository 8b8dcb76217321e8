#include <benchmark/benchmark.h>

#include "grouplet/maschke.hpp"
#include "grouplet/sampling.hpp"

using namespace grouplet;

namespace {

GroupRingElement sample(const FiniteGroup& g, const FieldSpec& spec, std::uint64_t seed) {
  Rng rng(seed);
  return random_element(rng, g, spec);
}

// Group-ring product as O(n^2) convolution over the Cayley table.
void BM_groupring_mul_convolution(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  FieldSpec spec = FieldSpec::prime_field(7);
  GroupRingElement x = sample(g, spec, 1);
  GroupRingElement y = sample(g, spec, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x * y);
  }
}
BENCHMARK(BM_groupring_mul_convolution)->Arg(8)->Arg(32)->Arg(128);

// The same product through dense matrices: embed both factors, multiply,
// extract. O(n^3) and allocation-heavy; the baseline the convolution beats.
void BM_groupring_mul_via_matrices(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  FieldSpec spec = FieldSpec::prime_field(7);
  GroupRingElement x = sample(g, spec, 1);
  GroupRingElement y = sample(g, spec, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract(embed(x) * embed(y), g));
  }
}
BENCHMARK(BM_groupring_mul_via_matrices)->Arg(8)->Arg(32)->Arg(128);

void BM_embed(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  FieldSpec spec = FieldSpec::prime_field(7);
  GroupRingElement x = sample(g, spec, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(embed(x));
  }
}
BENCHMARK(BM_embed)->Arg(8)->Arg(32)->Arg(128);

void BM_determinant_fp(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  FieldSpec spec = FieldSpec::prime_field(10007);
  ExactMatrix m = embed(sample(g, spec, 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(m));
  }
}
BENCHMARK(BM_determinant_fp)->Arg(16)->Arg(64);

void BM_determinant_rational(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  ExactMatrix m = embed(sample(g, FieldSpec::rationals(), 5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(m));
  }
}
BENCHMARK(BM_determinant_rational)->Arg(8)->Arg(16);

void BM_verdict_semisimple(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::symmetric(4);
  FieldSpec spec = FieldSpec::prime_field(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verdict(g, spec));
  }
}
BENCHMARK(BM_verdict_semisimple);

void BM_radical_oracle(benchmark::State& state) {
  FiniteGroup g = FiniteGroup::cyclic(static_cast<int>(state.range(0)));
  FieldSpec spec = FieldSpec::prime_field(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radical_oracle(g, spec));
  }
}
BENCHMARK(BM_radical_oracle)->Arg(6)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
