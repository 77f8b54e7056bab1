#include <benchmark/benchmark.h>

#include "koszul/generators.hpp"
#include "koszul/groebner.hpp"
#include "koszul/koszul.hpp"
#include "koszul/linalg.hpp"
#include "koszul/models.hpp"
#include "koszul/multiplicity.hpp"
#include "koszul/spectral.hpp"
#include "koszul/spectrum.hpp"

namespace {

using namespace koszul;

Matrix random_integer_matrix(std::size_t d, std::uint64_t seed) {
  Draw draw(seed);
  Matrix m = Matrix::zeros(d, d, Backend::Exact);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m.set(i, j, GaussianRational{draw.integer(-5, 5)});
  return m;
}

void BM_RankExact(benchmark::State& state) {
  const Matrix m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankExact)->RangeMultiplier(2)->Range(8, 64);

void BM_RankFloat(benchmark::State& state) {
  const Matrix m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 1).to_backend(Backend::Float);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankFloat)->RangeMultiplier(2)->Range(8, 64);

void BM_KoszulHomology(benchmark::State& state) {
  Draw draw(2);
  const CommutingTuple t = random_commuting_tuple(draw, static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(koszul_homology(t));
}
BENCHMARK(BM_KoszulHomology)->DenseRange(1, 4);

void BM_SpectralSequence(benchmark::State& state) {
  Draw draw(3);
  const CommutingTuple t = random_commuting_tuple(draw, 4, static_cast<std::size_t>(state.range(0)));
  const std::vector<Matrix>& ops = t.operators();
  const CommutingTuple a({ops[0], ops[1]});
  const CommutingTuple b({ops[2], ops[3]});
  for (auto _ : state) {
    const Bicomplex bc = build_bicomplex(a, b);
    benchmark::DoNotOptimize(page_sequence(bc, 3));
  }
}
BENCHMARK(BM_SpectralSequence)->DenseRange(2, 6, 2);

void BM_Groebner(benchmark::State& state) {
  const auto g = parse_system("z1^2 - z2*z3 ; z2^2 - z3 ; z3^3 - z1", 3);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_algebra(groebner(g)));
}
BENCHMARK(BM_Groebner);

void BM_LocalMultiplicity(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const auto g = parse_system("z1^" + std::to_string(k) + " - z2 ; z2^" + std::to_string(k), 2);
  const std::vector<GaussianRational> origin(2);
  for (auto _ : state) benchmark::DoNotOptimize(local_multiplicity(g, origin));
}
BENCHMARK(BM_LocalMultiplicity)->DenseRange(2, 4);

void BM_SpectralDecomposition(benchmark::State& state) {
  Draw draw(4);
  const auto backend = state.range(1) == 0 ? Backend::Exact : Backend::Float;
  const CommutingTuple t = random_commuting_tuple(draw, 3, static_cast<std::size_t>(state.range(0))).to_backend(backend);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_decomposition(t));
}
BENCHMARK(BM_SpectralDecomposition)->ArgsProduct({{4, 8, 16}, {0, 1}});

void BM_GlobalIndex(benchmark::State& state) {
  const ModelTuple mt{DomainDescriptor::unit_polydisc(2), parse_system("z1^2 - z2 ; z2^2 - 1/4", 2)};
  for (auto _ : state) benchmark::DoNotOptimize(global_index(mt));
}
BENCHMARK(BM_GlobalIndex);

}  // namespace

BENCHMARK_MAIN();
