#include <benchmark/benchmark.h>

#include <random>

#include "schaefer/oracle.hpp"

namespace {

schaefer::Formula random_xor_formula(int n, int apps) {
  std::mt19937 gen(42);
  std::uniform_int_distribution<int> var(1, n);
  schaefer::Formula phi;
  phi.num_vars = n;
  phi.set = schaefer::make_constraint_set({schaefer::make_constraint("XOR2", 2, "0110"),
                                           schaefer::make_constraint("XNOR2", 2, "1001")});
  for (int i = 0; i < apps; ++i) {
    phi.applications.push_back({{i % 2 ? "XOR2" : "XNOR2", {var(gen), var(gen)}}, 1});
  }
  return phi;
}

void BM_MaxSat(benchmark::State& state) {
  const auto phi = random_xor_formula(static_cast<int>(state.range(0)), 24);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schaefer::max_sat(phi));
  }
}
BENCHMARK(BM_MaxSat)->Arg(14)->Arg(18)->Arg(20);

void BM_LinearAttack(benchmark::State& state) {
  const auto phi = random_xor_formula(static_cast<int>(state.range(0)), 48);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schaefer::linear_attack(phi));
  }
}
BENCHMARK(BM_LinearAttack)->Arg(16)->Arg(64);

}  // namespace
