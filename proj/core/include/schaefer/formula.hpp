#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schaefer/constraint.hpp"
#include "schaefer/fraction.hpp"

namespace schaefer {

/// A bit vector. Doubles as a plain assignment over n variables and as the
/// concatenation (assignment, proof) when evaluated against an extended
/// formula.
struct Assignment {
  std::vector<bool> bits;

  int size() const { return static_cast<int>(bits.size()); }
  bool operator[](int i) const { return bits[static_cast<std::size_t>(i)]; }

  static Assignment from_string(std::string_view s);
  static Assignment from_code(std::uint64_t code, int length);
  std::uint64_t to_code() const;  // requires size() <= 63
  std::string to_string() const;

  bool operator==(const Assignment&) const = default;
};

/// One constraint applied to a tuple of 1-based variable indices. Indices
/// may repeat.
struct ConstraintApplication {
  std::string constraint;
  std::vector<int> indices;

  bool operator==(const ConstraintApplication&) const = default;
};

struct WeightedApplication {
  ConstraintApplication app;
  std::int64_t weight = 1;  // positive
};

/// Weighted multiset of constraint applications over num_vars variables.
/// Owns a copy of its constraint set.
struct Formula {
  int num_vars = 0;
  ConstraintSet set;
  std::vector<WeightedApplication> applications;

  std::int64_t total_weight() const;
};

// Checks every structural invariant: num_vars >= 1, positive weights, tuple
// lengths matching arities, indices in range, names resolving. A formula
// with no applications is structurally valid (it arises as the reduction of
// an empty formula); operations that evaluate satisfaction reject it.
void validate_formula(const Formula& phi);

/// f applied to an explicit value tuple; tuple length must equal the arity.
bool apply_constraint(const Constraint& c, const std::vector<bool>& values);

/// Exact satisfied-weight fraction of phi under a. Requires a.size() ==
/// phi.num_vars and positive total weight.
Fraction evaluate(const Formula& phi, const Assignment& a);

/// Pre-resolved view of a formula for repeated evaluation. Borrows the
/// formula; keep it alive.
class ResolvedFormula {
 public:
  explicit ResolvedFormula(const Formula& phi);

  std::int64_t satisfied_weight(const Assignment& a) const;
  // Fast path for enumeration; requires num_vars <= 63.
  std::int64_t satisfied_weight(std::uint64_t code) const;
  std::int64_t total_weight() const { return total_weight_; }
  int num_vars() const { return num_vars_; }

 private:
  struct Item {
    const std::vector<bool>* table;
    std::vector<int> idx0;  // 0-based
    std::int64_t weight;
  };
  std::vector<Item> items_;
  std::int64_t total_weight_ = 0;
  int num_vars_ = 0;
};

}  // namespace schaefer
