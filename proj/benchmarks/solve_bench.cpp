#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "pairvis/generators.hpp"
#include "pairvis/query.hpp"
#include "pairvis/solver.hpp"

using namespace pairvis;

namespace {

struct Fixture {
  SimplePolygon polygon;
  std::vector<std::pair<Point, Point>> pairs;
};

Fixture make_fixture(std::size_t n) {
  Fixture f{SimplePolygon::validate_and_normalize(random_simple_polygon(n, 42 + n)), {}};
  std::mt19937_64 rng(n);
  for (int k = 0; k < 64; ++k) f.pairs.emplace_back(random_point_in(f.polygon, rng), random_point_in(f.polygon, rng));
  return f;
}

void BM_Triangulate(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Triangulation(f.polygon));
  state.SetComplexityN(state.range(0));
}

// Includes triangulating the polygon, as a one-shot call would.
void BM_SolveMinMax(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [s, t] = f.pairs[k++ % f.pairs.size()];
    benchmark::DoNotOptimize(solve(f.polygon, s, t, Objective::min_max()));
  }
  state.SetComplexityN(state.range(0));
}

void BM_SolveMinSumPrebuilt(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<std::size_t>(state.range(0)));
  const Triangulation tri(f.polygon);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [s, t] = f.pairs[k++ % f.pairs.size()];
    benchmark::DoNotOptimize(solve(tri, s, t, Objective::min_sum()));
  }
  state.SetComplexityN(state.range(0));
}

void BM_Query(benchmark::State& state) {
  const Fixture f = make_fixture(static_cast<std::size_t>(state.range(0)));
  const QueryStructure q(f.polygon);
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& [s, t] = f.pairs[k++ % f.pairs.size()];
    benchmark::DoNotOptimize(q.query_minmax(s, t));
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Triangulate)->RangeMultiplier(10)->Range(100, 10000)->Complexity();
BENCHMARK(BM_SolveMinMax)->RangeMultiplier(10)->Range(100, 10000)->Complexity();
BENCHMARK(BM_SolveMinSumPrebuilt)->RangeMultiplier(10)->Range(100, 10000)->Complexity();
BENCHMARK(BM_Query)->RangeMultiplier(10)->Range(100, 10000)->Complexity();
BENCHMARK_MAIN();
