#include <benchmark/benchmark.h>

#include <string>

#include "schaefer/classify.hpp"

namespace {

schaefer::Constraint arity3_constraint(std::uint32_t table_bits) {
  std::string bits(8, '0');
  for (std::size_t p = 0; p < 8; ++p) {
    if ((table_bits >> p) & 1u) bits[p] = '1';
  }
  return schaefer::make_constraint("B" + std::to_string(table_bits), 3, bits);
}

void BM_ClassifyArity3Sweep(benchmark::State& state) {
  for (auto _ : state) {
    for (std::uint32_t t = 0; t < 256; ++t) {
      benchmark::DoNotOptimize(schaefer::classify_constraint(arity3_constraint(t)));
    }
  }
}
BENCHMARK(BM_ClassifyArity3Sweep);

void BM_SynthesizeHornArity3(benchmark::State& state) {
  const auto c = arity3_constraint(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(schaefer::synthesize_clauses(c, schaefer::ClauseFamily::Horn));
  }
}
BENCHMARK(BM_SynthesizeHornArity3)->Arg(0x17)->Arg(0x80)->Arg(0xfe);

}  // namespace
