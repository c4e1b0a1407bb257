#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schaefer {

// Exit codes: 0 success, 1 usage/parse error, 2 capacity error, 3 negative
// result (unsat, gadget not found, attack invariant violated).
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCapacity = 2;
inline constexpr int kExitNegative = 3;

/// Dispatches to the subcommands {classify, synth, solve, lin-attack,
/// distance, gen, attack, gadget, reduce}. Diagnostics go to err; reports to
/// out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schaefer
