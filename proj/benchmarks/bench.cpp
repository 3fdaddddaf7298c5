#include <benchmark/benchmark.h>

#include <random>

#include "eef/border.hpp"
#include "eef/models.hpp"

using namespace eef;

namespace {

IntMatrix random_square(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = pick(rng);
  return m;
}

void bm_hnf(benchmark::State& state) {
  auto m = random_square(std::size_t(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}

void bm_kernel_four_cycle(benchmark::State& state) {
  auto m = four_cycle_model();
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}

void bm_hilbert_independence(benchmark::State& state) {
  ModelMatrix m;
  m.states.labels = {"00", "01", "10", "11"};
  m.states.mu.assign(4, Int(1));
  m.row_names = {"R", "C"};
  m.a = IntMatrix{{1, 1, 0, 0}, {1, 0, 1, 0}};
  auto k = kernel_basis(m);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(k));
}

void bm_hilbert_four_cycle(benchmark::State& state) {
  auto k = kernel_basis(four_cycle_model());
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(k));
}

void bm_limit_four_cycle_face(benchmark::State& state) {
  auto m = four_cycle_model();
  auto basis = hilbert_basis(kernel_basis(m));
  auto faces = exposed_sets_from_basis(basis, m);
  auto path = make_gibbs_path(faces[0], ThetaParam{std::vector<double>(9, 0.0)});
  for (auto _ : state) benchmark::DoNotOptimize(limit_of_path(m, path, 1e-9));
}

void bm_membership_border(benchmark::State& state) {
  auto m = four_cycle_model();
  auto basis = hilbert_basis(kernel_basis(m));
  auto faces = exposed_sets_from_basis(basis, m);
  RatVector vals(m.cols(), Rational(0));
  for (std::size_t x : faces[0].states)
    vals[x] = make_rational(1, long(faces[0].states.size()));
  auto q = Density::exact(m.states, vals);
  for (auto _ : state) benchmark::DoNotOptimize(extended_membership(q, m, basis));
}

}  // namespace

BENCHMARK(bm_hnf)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_kernel_four_cycle);
BENCHMARK(bm_hilbert_independence);
BENCHMARK(bm_hilbert_four_cycle);
BENCHMARK(bm_limit_four_cycle_face);
BENCHMARK(bm_membership_border);

BENCHMARK_MAIN();
