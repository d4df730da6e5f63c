// Serial reference vs OpenMP kernels on fixed random inputs.

#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "weylharm/kernels.hpp"
#include "weylharm/linalg.hpp"

using namespace weylharm;
using namespace weylharm::testing;
using namespace weylharm::kernels;

namespace {

struct Inputs {
  WeylOp2 a, b;
  BiPoly p;
  Matrix m;
};

const Inputs& inputs(int size) {
  static std::map<int, Inputs> cache;
  auto it = cache.find(size);
  if (it != cache.end()) return it->second;
  Rng rng(2024 + static_cast<unsigned>(size));
  Inputs in;
  in.a = random_op(rng, 6, 6, size);
  in.b = random_op(rng, 6, 6, size);
  in.p = random_bipoly(rng, 16, size);
  const std::size_t n = static_cast<std::size_t>(size);
  in.m = Matrix(n, n + 4);
  for (std::size_t i = 0; i < in.m.rows(); ++i)
    for (std::size_t j = 0; j < in.m.cols(); ++j)
      if (uniform(rng, 0, 2) == 0) in.m(i, j) = GaussRational(random_rational(rng));
  return cache.emplace(size, std::move(in)).first->second;
}

void BM_MultiplySerial(benchmark::State& s) {
  const auto& in = inputs(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(multiply_serial(in.a, in.b));
}
void BM_MultiplyParallel(benchmark::State& s) {
  const auto& in = inputs(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(multiply_parallel(in.a, in.b));
}
void BM_ApplySerial(benchmark::State& s) {
  const auto& in = inputs(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(apply_serial(in.a, in.p));
}
void BM_ApplyParallel(benchmark::State& s) {
  const auto& in = inputs(static_cast<int>(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(apply_parallel(in.a, in.p));
}
void BM_RrefSerial(benchmark::State& s) {
  const auto& in = inputs(static_cast<int>(s.range(0)));
  for (auto _ : s) {
    Matrix m = in.m;
    benchmark::DoNotOptimize(rref_serial(m));
  }
}
void BM_RrefParallel(benchmark::State& s) {
  const auto& in = inputs(static_cast<int>(s.range(0)));
  for (auto _ : s) {
    Matrix m = in.m;
    benchmark::DoNotOptimize(rref_parallel(m));
  }
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(16)->Arg(64);
BENCHMARK(BM_MultiplyParallel)->Arg(16)->Arg(64);
BENCHMARK(BM_ApplySerial)->Arg(16)->Arg(64);
BENCHMARK(BM_ApplyParallel)->Arg(16)->Arg(64);
BENCHMARK(BM_RrefSerial)->Arg(16)->Arg(32);
BENCHMARK(BM_RrefParallel)->Arg(16)->Arg(32);
BENCHMARK_MAIN();
