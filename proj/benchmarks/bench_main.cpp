#include <benchmark/benchmark.h>

#include <random>

#include "mixcay/atoms.hpp"
#include "mixcay/census.hpp"
#include "mixcay/chartable.hpp"
#include "mixcay/eigen_oracle.hpp"
#include "mixcay/families.hpp"
#include "mixcay/integrality.hpp"
#include "mixcay/spectra.hpp"

using namespace mixcay;

namespace {

const char* kGroups[] = {"cyclic:16", "dihedral:8", "modular:16", "sym:4", "alt:4"};

void BM_BuildFamily(benchmark::State& state) {
  const char* d = kGroups[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(build_family(d));
  state.SetLabel(d);
}
BENCHMARK(BM_BuildFamily)->DenseRange(0, 4);

void BM_CharacterTable(benchmark::State& state) {
  const char* d = kGroups[state.range(0)];
  const auto g = build_family(d);
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
  state.SetLabel(d);
}
BENCHMARK(BM_CharacterTable)->DenseRange(0, 4);

void BM_CharacterTableSym5(benchmark::State& state) {
  const auto g = build_family("sym:5");
  for (auto _ : state) benchmark::DoNotOptimize(character_table(g));
}
BENCHMARK(BM_CharacterTableSym5)->Unit(benchmark::kMillisecond);

void BM_Atoms(benchmark::State& state) {
  const auto g = build_family("modular:16");
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_sim_atoms(g));
    benchmark::DoNotOptimize(all_approx_atoms(g));
  }
}
BENCHMARK(BM_Atoms);

Eigen::MatrixXcd random_hermitian(int n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = d(rng);
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = Complex(d(rng), d(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

void BM_HermitianOracle(benchmark::State& state) {
  const auto m = random_hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian_oracle(m));
}
BENCHMARK(BM_HermitianOracle)->RangeMultiplier(2)->Range(8, 64);

void BM_GeneralOracle(benchmark::State& state) {
  // The class of element 1 in S4; plain QR stalls on these matrices.
  const auto g = build_family("sym:4");
  const auto s = connection_set(g, ElementSet(g.conjugacy().classes[g.class_of(1)]));
  const Eigen::MatrixXcd a = zero_one_adjacency(g, s).cast<Complex>();
  for (auto _ : state) benchmark::DoNotOptimize(eig_general_oracle(a));
}
BENCHMARK(BM_GeneralOracle);

void BM_FormulaSpectrum(benchmark::State& state) {
  const auto g = build_family("modular:16");
  const auto t = character_table(g);
  const auto s = connection_set(g, g.parse_elements("a,a3,a5,a7,a3x,a7x"));
  for (auto _ : state) benchmark::DoNotOptimize(h_spectrum_normal(g, t, s));
}
BENCHMARK(BM_FormulaSpectrum);

void BM_Decide(benchmark::State& state) {
  const auto g = build_family("modular:16");
  const auto s = connection_set(g, g.parse_elements("a,a3,a5,a7,a3x,a7x"));
  for (auto _ : state) benchmark::DoNotOptimize(decide_h_integral(g, s));
}
BENCHMARK(BM_Decide);

void BM_Census(benchmark::State& state) {
  const auto g = build_family("modular:16");
  const auto t = character_table(g);
  CensusOptions o;
  o.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(g, t, o));
}
BENCHMARK(BM_Census)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
