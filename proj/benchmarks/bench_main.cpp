#include <benchmark/benchmark.h>

#include <random>

#include "hopfimage/axioms.hpp"
#include "hopfimage/builtins.hpp"
#include "hopfimage/free_maps.hpp"
#include "hopfimage/inner_faithful.hpp"

using namespace hopfimage;

static Matrix random_matrix(FieldSpec f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-5, 5);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(f, d(rng));
  return m;
}

static void BM_RrefRationals(benchmark::State& state) {
  const Matrix m = random_matrix(FieldSpec::rationals(), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRationals)->Arg(8)->Arg(16)->Arg(32);

static void BM_RrefPrime(benchmark::State& state) {
  const Matrix m = random_matrix(FieldSpec::prime_field(101), state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefPrime)->Arg(16)->Arg(64);

static void BM_CheckHopf(benchmark::State& state, const char* name) {
  auto h = builtin_hopf(name);
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf(*h).all_passed());
}
BENCHMARK_CAPTURE(BM_CheckHopf, sweedler, "sweedler");
BENCHMARK_CAPTURE(BM_CheckHopf, taft3, "taft:3:2:7");
BENCHMARK_CAPTURE(BM_CheckHopf, s3_x_klein, "tensor(group:S3,group:Z2xZ2)");

static void BM_LargestHopfIdeal(benchmark::State& state, const char* fam_name) {
  MorphismFamily fam = builtin_family(fam_name);
  const Subspace v = common_kernel(fam);
  for (auto _ : state) benchmark::DoNotOptimize(largest_hopf_ideal(fam.domain(), v).subspace.dim());
}
BENCHMARK_CAPTURE(BM_LargestHopfIdeal, sign, "fam:sign");
BENCHMARK_CAPTURE(BM_LargestHopfIdeal, chi_squared, "fam:tensor(fam:chi,fam:chi)");

static void BM_KernelChain(benchmark::State& state) {
  MorphismFamily fam = builtin_family("fam:rho");
  for (auto _ : state) benchmark::DoNotOptimize(kernel_chain(fam, state.range(0)).levels.size());
}
BENCHMARK(BM_KernelChain)->Arg(2)->Arg(4);

static void BM_FreeProductMultiply(benchmark::State& state) {
  TruncatedFreeProduct fp({builtin_hopf("group:S3"), builtin_hopf("sweedler")}, 6);
  std::mt19937_64 rng(3);
  const FPElement a = random_element(fp, 3, 4, rng, false);
  const FPElement b = random_element(fp, 3, 4, rng, false);
  for (auto _ : state) benchmark::DoNotOptimize(fp.multiply(a, b).size());
}
BENCHMARK(BM_FreeProductMultiply);

static void BM_FreeSeparation(benchmark::State& state) {
  MorphismFamily fh = builtin_family("fam:sweedler-rep");
  MorphismFamily fk = builtin_family("fam:chi");
  TruncatedFreeProduct hk({fh.domain_ptr(), fk.domain_ptr()}, 6);
  std::mt19937_64 rng(5);
  const FPElement x = random_element(hk, 3, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(free_separation_test(fh, fk, hk, x, 4).has_value());
}
BENCHMARK(BM_FreeSeparation);
BENCHMARK_MAIN();
