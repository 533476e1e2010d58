#include <benchmark/benchmark.h>

#include "nilrad/nilradical.hpp"
#include "nilrad/theory.hpp"

using namespace nilrad;

namespace {

void BM_CanonicalClosure(benchmark::State& state) {
  const Field f = Field::rationals();
  const std::vector<std::vector<int>> shapes = {
      {1, 2, 1}, {2, 3, 2}, {1, 2, 1, 2, 1}, {3, 5, 3, 4}, {4, 4, 4, 2}};
  const Shape sh(shapes[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_nilradical(BlockSeq::canonical(sh, f)));
  }
  state.SetLabel(sh.key());
}
BENCHMARK(BM_CanonicalClosure)->DenseRange(0, 4);

void BM_RandomClosure(benchmark::State& state) {
  const Field f = Field::rationals();
  const Shape sh({1, 4, 1, 4, 1});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const BlockSeq s = random_seq(sh, f, ++seed, 4, SeqConstraint::normalized);
    benchmark::DoNotOptimize(generate_nilradical(s));
  }
}
BENCHMARK(BM_RandomClosure);

void BM_Normalize(benchmark::State& state) {
  const Field f = Field::rationals();
  const Shape sh({3, 5, 3, 4});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const BlockSeq s = random_seq(sh, f, ++seed, 4, SeqConstraint::none);
    benchmark::DoNotOptimize(normalize_seq(s));
  }
}
BENCHMARK(BM_Normalize);

void BM_RankTable(benchmark::State& state) {
  const Field f = Field::rationals();
  const Shape sh({3, 5, 3, 4});
  const NilReport rep = generate_nilradical(BlockSeq::canonical(sh, f));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_table_from_report(rep));
  }
}
BENCHMARK(BM_RankTable);

void BM_RankRational(benchmark::State& state) {
  const Field f = Field::rationals();
  Matrix m(f, 12, 12);
  std::uint64_t x = 88172645463325252ull;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      m.at(i, j) = Scalar::from_int(f, static_cast<long long>(x % 19) - 9);
    }
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational);

}  // namespace

BENCHMARK_MAIN();
