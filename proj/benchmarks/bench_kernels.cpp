#include <benchmark/benchmark.h>

#include <cmath>

#include "nscale/detector.hpp"
#include "nscale/fourier.hpp"
#include "nscale/gauge_covariant.hpp"
#include "nscale/gauge_paths.hpp"
#include "nscale/quantum_scaling.hpp"

using namespace nscale;

namespace {

GaugeFieldSpec wavy_field(int dim) {
  ScalarPotential g = make_potential(dim);
  for (int a = 0; a < dim; ++a) {
    g.linear[a] = 0.1 * (a + 1);
    g.diagonal[a] = 0.02;
  }
  g.sine_amp = 0.2;
  g.sine_k = 1.3;
  return GaugeFieldSpec::gradient(g, 0.5);
}

void BM_path_scale(benchmark::State& state) {
  const auto field = wavy_field(3);
  const auto path = PolylinePath::make({Point{-1.0, 0.0, 0.5}, Point{0.3, 1.2, -0.4}, Point{1.0, -1.0, 0.0}});
  const int steps = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_scale(field, path, steps).value);
  state.SetItemsProcessed(state.iterations() * 2 * steps);
}
BENCHMARK(BM_path_scale)->Arg(16)->Arg(64)->Arg(256);

void BM_scaled_packet(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Grid g = Grid::cube(3, -4.0, 4.0, n);
  const auto psi = gaussian_packet(g, Point{0.2, -0.3, 0.1}, 1.2, Point{0.5, 0.0, 0.0});
  const auto field = wavy_field(3);
  for (auto _ : state) benchmark::DoNotOptimize(scaled_packet(psi, field, g.box().lo));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_scaled_packet)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_detector_expectation(benchmark::State& state) {
  const Grid g = Grid::cube(3, -8.0, 8.0, 32);
  const auto psi = gaussian_packet(g, Point{1.5, -1.0, 0.5}, 1.2, Point{0.0, 0.0, 0.0});
  const auto field = GaugeFieldSpec::constant({1.0, 0.0, 0.0}, 0.05);
  const auto partition = DetectorPartition::make(g, 16.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(detector_expectation(psi, field, partition, ExpectationMode::raw));
  }
}
BENCHMARK(BM_detector_expectation)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_covariant_derivative(benchmark::State& state) {
  const Grid g = Grid::cube(2, 0.0, 4.0, 64);
  const int comps = static_cast<int>(state.range(0));
  std::vector<std::complex<double>> v;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Point x = g.point(i);
    v.push_back(std::polar(1.0, std::sin(x[0]) + x[1]));
    if (comps == 2) v.push_back({0.3, -0.1});
  }
  const InternalField f(g, comps, std::move(v));
  const std::array<GaugeFieldSpec, 3> omega{GaugeFieldSpec::constant({0.5, 0.1}), GaugeFieldSpec::zero(2),
                                            GaugeFieldSpec::constant({-0.2, 0.3})};
  const auto pot = GaugePotentials::make(g, comps, GaugeFieldSpec::constant({0.2, 0.1}), 0.7, wavy_field(2),
                                         comps == 2 ? 1.1 : 0.0, comps == 2 ? &omega : nullptr);
  const auto form = state.range(1) == 0 ? DerivativeForm::first_order : DerivativeForm::exact_link;
  for (auto _ : state) benchmark::DoNotOptimize(covariant_derivative(f, pot, 0, form));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_covariant_derivative)->Args({1, 0})->Args({1, 1})->Args({2, 0})->Args({2, 1});

void BM_momentum_amplitudes(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const Grid g = Grid::cube(dim, -8.0, 8.0, dim == 1 ? 4096 : (dim == 2 ? 256 : 64));
  Point mu(dim), k0(dim);
  const auto psi = gaussian_packet(g, mu, 1.0, k0);
  for (auto _ : state) benchmark::DoNotOptimize(momentum_amplitudes(psi));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.size()));
}
BENCHMARK(BM_momentum_amplitudes)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
