#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "polystab/halfplane.hpp"
#include "polystab/sturm.hpp"

using namespace polystab;

namespace {

// Deterministic inputs so runs are comparable across machines.
Polynomial planted(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4), coin(0, 1);
  Polynomial f = Polynomial::one();
  while (f.degree() + 2 <= degree && coin(rng)) {
    Rational a(num(rng), den(rng)), b(std::abs(num(rng)) + 1, den(rng));
    f = f * Polynomial({Rational(1), -2 * a, a * a + b * b});
  }
  while (f.degree() < degree)
    f = f * Polynomial({Rational(1), Rational(num(rng), den(rng))});
  return f;
}

void bm_gcd(benchmark::State& state) {
  std::mt19937_64 rng(7);
  int degree = static_cast<int>(state.range(0));
  Polynomial g = planted(rng, degree / 2);
  Polynomial a = g * planted(rng, degree - g.degree());
  Polynomial b = g * planted(rng, degree - g.degree());
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}

void bm_isolate_real_roots(benchmark::State& state) {
  std::mt19937_64 rng(8);
  Polynomial f = planted(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(isolate_real_roots(f));
}

void bm_half_plane_counts(benchmark::State& state) {
  std::mt19937_64 rng(9);
  Polynomial f = planted(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(half_plane_counts(f));
}

void bm_interlacing_certificate(benchmark::State& state) {
  std::mt19937_64 rng(10);
  Polynomial f = planted(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(interlacing_certificate(f));
}

BENCHMARK(bm_gcd)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_isolate_real_roots)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_half_plane_counts)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_interlacing_certificate)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
