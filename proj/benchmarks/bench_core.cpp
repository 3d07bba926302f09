#include <benchmark/benchmark.h>

#include "gpd/configs.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/p4ext.hpp"
#include "gpd/sampling.hpp"

using namespace gpd;

namespace {

Field f3() { return Field::from_min_poly(std::vector<long long>{1, 1, 1}); }

void BM_field_mul(benchmark::State& state) {
  Field f = f3();
  sampling::Rng rng(1);
  FieldElement a = sampling::random_element(f, rng, 20);
  FieldElement b = sampling::random_element(f, rng, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_field_mul);

void BM_field_inverse(benchmark::State& state) {
  Field f = Field::from_min_poly(std::vector<long long>{1, 1, 1, 1, 1});
  sampling::Rng rng(2);
  FieldElement a = sampling::random_nonzero_element(f, rng, 20);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.inverse());
  }
}
BENCHMARK(BM_field_inverse);

void BM_projection_matrix(benchmark::State& state) {
  Configuration klein = builtin(Builtin::Klein);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        projection_matrix(klein.lines[0], klein.lines[1], klein.lines[2]));
  }
}
BENCHMARK(BM_projection_matrix);

void BM_enumerate_klein(benchmark::State& state) {
  Configuration klein = builtin(Builtin::Klein);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_generators(klein));
  }
}
BENCHMARK(BM_enumerate_klein);

void BM_vertex_group_klein(benchmark::State& state) {
  Configuration klein = builtin(Builtin::Klein);
  GroupoidAnalysis a = enumerate_generators(klein);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        vertex_group(klein, a, 0, default_cap(klein.field)));
  }
}
BENCHMARK(BM_vertex_group_klein);

void BM_stabilizer_xtilde(benchmark::State& state) {
  PenroseParameterSets sets = penrose_parameter_sets();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stabilizer(sets.x_tilde));
  }
}
BENCHMARK(BM_stabilizer_xtilde);

void BM_orbit_klein(benchmark::State& state) {
  Configuration klein = builtin(Builtin::Klein);
  GroupoidAnalysis a = enumerate_generators(klein);
  Field f = klein.field;
  ProjPoint start({f.one(), f.zero()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(orbit(klein, a, 0, start));
  }
}
BENCHMARK(BM_orbit_klein);

void BM_l25_generation(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_l25());
  }
}
BENCHMARK(BM_l25_generation);

}  // namespace

BENCHMARK_MAIN();
