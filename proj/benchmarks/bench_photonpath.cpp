#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "photonpath/photonpath.hpp"

namespace pp = photonpath;
using pp::cdouble;

namespace {

const pp::SplitterCoefficients kSplitter = pp::make_symmetric_splitter(std::sqrt(0.3), 0.4);

void BM_FockTransform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pp::fock_transform({n, n}, kSplitter));
}
BENCHMARK(BM_FockTransform)->Arg(1)->Arg(4)->Arg(12);

void BM_FockOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pp::fock_oracle({n, n}, kSplitter));
}
BENCHMARK(BM_FockOracle)->Arg(1)->Arg(4)->Arg(12);

void BM_ThermalSplitPmf(benchmark::State& state) {
  const auto t = pp::thermal_split(pp::ThermalState::from_mean(5.0), kSplitter);
  for (auto _ : state) benchmark::DoNotOptimize(pp::photon_statistics(t));
}
BENCHMARK(BM_ThermalSplitPmf);

void BM_Multilayer(benchmark::State& state) {
  const auto wave = pp::WaveParams::from_wavelength(1.0);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(1.0, 3.0);
  std::vector<pp::Layer> stack;
  for (int i = 0; i < state.range(0); ++i) stack.push_back({cdouble(u(rng), 0.01), 0.1 * u(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(pp::multilayer_coefficients(stack, wave));
}
BENCHMARK(BM_Multilayer)->Arg(2)->Arg(16)->Arg(128);

void BM_PathSum(benchmark::State& state) {
  const auto wave = pp::WaveParams::from_wavelength(1e-6);
  pp::ScattererAssembly three;
  for (int i = 0; i < 3; ++i) {
    three.push_back({pp::Vec3(1e-6 * i, 2e-6 * (i % 2), 0.5e-6), pp::DipoleKind::kElectric,
                     pp::CMat3::Identity() * cdouble(1e-31, 1e-32)});
  }
  const pp::DipoleEndpoint s{pp::Vec3(-3e-6, 0, 0), pp::DipoleKind::kElectric, pp::CVec3(0, 0, 1)};
  const pp::DipoleEndpoint d{pp::Vec3(5e-6, 1e-6, 0), pp::DipoleKind::kElectric, pp::CVec3(0, 1, 0)};
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pp::multi_scatterer_signal(s, three, d, order, wave));
}
BENCHMARK(BM_PathSum)->Arg(1)->Arg(3)->Arg(6);

pp::FieldGrid gaussian(int n, double dx, double w) {
  return pp::FieldGrid::sample(n, n, dx, dx, [w](double x, double y) {
    return cdouble(std::exp(-(x * x + y * y) / (w * w)));
  });
}

void BM_FarFieldScalar(benchmark::State& state) {
  const auto wave = pp::WaveParams::from_wavelength(1.0);
  const int n = static_cast<int>(state.range(0));
  const auto g = gaussian(n, 0.5, 0.1 * n);
  const double z = 1e4;
  for (auto _ : state) benchmark::DoNotOptimize(pp::far_field_scalar(g, {0.1 * z, -0.05 * z, z}, wave));
}
BENCHMARK(BM_FarFieldScalar)->Arg(33)->Arg(129)->Arg(513);

void BM_AngularSpectrumPoint(benchmark::State& state) {
  const auto wave = pp::WaveParams::from_wavelength(1.0);
  const auto g = gaussian(33, 0.5, 1.75);
  const double z = 1e3 / wave.k0();
  for (auto _ : state) benchmark::DoNotOptimize(pp::angular_spectrum_propagate(g, 0.1 * z, 0.0, z, wave));
}
BENCHMARK(BM_AngularSpectrumPoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
