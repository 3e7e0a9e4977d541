#include <benchmark/benchmark.h>

#include "fragfield/basis.hpp"
#include "fragfield/chem.hpp"
#include "fragfield/integrals.hpp"

namespace {

const fragfield::FragmentedSystem& fh3() {
  static auto sys = fragfield::parse_geometry(
      "6 3\n"
      "F 1  0.779023  0.287467 0.000000\n"
      "H 1  0.000000  0.807300 0.000000\n"
      "F 2 -1.361653  1.874668 0.000000\n"
      "H 2 -1.330503  2.801407 0.000000\n"
      "F 3  0.648089 -2.399606 0.000000\n"
      "H 3  0.741364 -1.471463 0.000000\n");
  return sys;
}

void BM_OneElectronIntegrals(benchmark::State& state) {
  const auto basis = fragfield::build_basis(fh3());
  for (auto _ : state) {
    fragfield::IntegralStore store;
    fragfield::one_electron_integrals(basis, fh3(), store);
    benchmark::DoNotOptimize(store.S);
  }
}
BENCHMARK(BM_OneElectronIntegrals);

void BM_TwoElectronIntegrals(benchmark::State& state) {
  const auto basis = fragfield::build_basis(fh3());
  for (auto _ : state) {
    fragfield::IntegralStore store;
    fragfield::two_electron_integrals(basis, store);
    benchmark::DoNotOptimize(store.eri.v);
  }
}
BENCHMARK(BM_TwoElectronIntegrals);

} // namespace
