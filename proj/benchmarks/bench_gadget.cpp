#include <benchmark/benchmark.h>

#include "schaefer/gadget.hpp"

namespace {

void BM_VerifyOr3Pattern(benchmark::State& state) {
  const auto g = schaefer::or3_gadget_over_one_in_three(false, false, false);
  const auto s = schaefer::make_constraint_set({schaefer::one_in_three_constraint()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(schaefer::verify_perfect(g, s));
  }
}
BENCHMARK(BM_VerifyOr3Pattern);

void BM_SearchNandGadget(benchmark::State& state) {
  const auto target = schaefer::make_constraint("NAND", 2, "1110");
  const auto s = schaefer::make_constraint_set({schaefer::one_in_three_constraint()});
  for (auto _ : state) {
    benchmark::DoNotOptimize(schaefer::search_gadget(target, s, 1, 1));
  }
}
BENCHMARK(BM_SearchNandGadget);

void BM_SearchOr2GadgetLevel2(benchmark::State& state) {
  const auto target = schaefer::make_constraint("OR2", 2, "0111");
  const auto s = schaefer::make_constraint_set({schaefer::one_in_three_constraint()});
  for (auto _ : state) {
    // Exhausts the two-aux levels without finding a gadget.
    benchmark::DoNotOptimize(schaefer::search_gadget(target, s, 2, 3));
  }
}
BENCHMARK(BM_SearchOr2GadgetLevel2);

}  // namespace
