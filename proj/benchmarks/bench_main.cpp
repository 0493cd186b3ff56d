#include <benchmark/benchmark.h>

#include <array>
#include <random>
#include <vector>

#include "schottky_lab/certificates.hpp"
#include "schottky_lab/combinatorics.hpp"
#include "schottky_lab/mobius.hpp"
#include "schottky_lab/schottky.hpp"
#include "schottky_lab/words.hpp"

using namespace schottky_lab;

namespace {

SchottkyMarking genus2() {
  auto pair = [](Complex c, Complex cp) {
    return CirclePair{GeneralizedCircle::circle(c, 1), GeneralizedCircle::circle(cp, 1),
                      Mobius(cp, -cp * c - 1.0, 1.0, -c)};
  };
  return SchottkyMarking({pair(0, 10), pair(30, 40)});
}

void BM_Compose(benchmark::State& state) {
  const Mobius f(1, 2, 3, 7), g(Complex(0, 1), 1, 1, Complex(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_Compose);

void BM_CrossRatio(benchmark::State& state) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-5, 5);
  std::vector<std::array<ExtendedComplex, 4>> quads;
  for (int i = 0; i < 256; ++i) {
    quads.push_back({Complex(u(gen), u(gen)), Complex(u(gen), u(gen)), Complex(u(gen), u(gen)),
                     Complex(u(gen), u(gen))});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& q = quads[i++ & 255];
    benchmark::DoNotOptimize(cross_ratio(q[0], q[1], q[2], q[3]));
  }
}
BENCHMARK(BM_CrossRatio);

void BM_EnumerateGroup(benchmark::State& state) {
  const auto m = genus2();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateGroup)->Arg(4)->Arg(6)->Arg(8);

void BM_LimitSet(benchmark::State& state) {
  const auto m = genus2();
  for (auto _ : state) benchmark::DoNotOptimize(limit_set(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LimitSet)->Arg(6)->Arg(7);

void BM_ProperPower(benchmark::State& state) {
  const Word w = pinchable_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_proper_power(w));
}
BENCHMARK(BM_ProperPower)->Arg(6)->Arg(60);

void BM_CubeLabeling(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cube_labeling_search());
}
BENCHMARK(BM_CubeLabeling);

void BM_OctahedronScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(admissible_genus3_graphs());
}
BENCHMARK(BM_OctahedronScan);

void BM_EnumerateCusps(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cusps(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateCusps)->Arg(6)->Arg(8);

}  // namespace
BENCHMARK_MAIN();
