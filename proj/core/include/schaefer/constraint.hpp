#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schaefer {

inline constexpr int kDefaultMaxArity = 10;
inline constexpr int kDefaultNMax = 24;
// Hard ceiling for assignment-space enumeration, regardless of --n-max.
inline constexpr int kEnumerationCeiling = 30;

/// A Boolean function f:{0,1}^k -> {0,1} stored as a truth table.
///
/// Table position p encodes the argument tuple with variable 1 in the least
/// significant bit: p = sum_j x_j * 2^(j-1). The text form of a table is a
/// 0/1 string indexed the same way, so XOR2 is "0110" and x AND NOT y is
/// "0100".
struct Constraint {
  std::string name;
  int arity = 0;
  std::vector<bool> table;  // size 2^arity

  bool value_at(std::uint32_t code) const { return table[code]; }
  std::vector<std::uint32_t> satisfying_codes() const;
  std::string table_string() const;
};

Constraint make_constraint(std::string name, int arity, std::string_view table_bits,
                           int max_arity = kDefaultMaxArity);

// Arity-1 constants with reserved names. Any constraint named "ID" or "NOT"
// must carry exactly these tables.
Constraint id_constraint();
Constraint not_constraint();

/// Non-empty collection of constraints with unique names.
struct ConstraintSet {
  std::vector<Constraint> constraints;

  const Constraint* find(const std::string& name) const;
  const Constraint& at(const std::string& name) const;  // UsageError when missing
  bool contains(const std::string& name) const;
};

ConstraintSet make_constraint_set(std::vector<Constraint> constraints);

}  // namespace schaefer
