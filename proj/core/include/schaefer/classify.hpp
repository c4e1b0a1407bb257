#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schaefer/formula.hpp"

namespace schaefer {

enum class Polymorphism { And2, Or2, Xor3, Maj3 };

enum class ClauseFamily { Horn, DualHorn, TwoClause, LinearEquation };

std::string to_string(Polymorphism op);
std::string to_string(ClauseFamily family);
std::optional<ClauseFamily> parse_clause_family(const std::string& text);

struct Literal {
  int var = 0;  // 1-based
  bool negated = false;
  bool operator==(const Literal&) const = default;
};

/// Disjunction of literals over distinct variables.
struct Clause {
  std::vector<Literal> literals;
  bool operator==(const Clause&) const = default;
};

/// XOR of the listed variables equals parity.
struct LinearEquation {
  std::vector<int> vars;  // 1-based, strictly increasing
  bool parity = false;
  bool operator==(const LinearEquation&) const = default;
};

/// Canonical (maximal implied-clause) representation of a constraint within
/// one clause family. Exactly one of clauses/equations is populated.
struct ClauseRepresentation {
  ClauseFamily family{};
  std::vector<Clause> clauses;
  std::vector<LinearEquation> equations;
};

std::string to_string(const Clause& clause);
std::string to_string(const LinearEquation& eq);

struct ConstraintFlags {
  bool zero_valid = false;
  bool one_valid = false;
  bool weakly_positive = false;
  bool weakly_negative = false;
  bool linear = false;
  bool two_cnf = false;
  bool c_closed = false;
  bool operator==(const ConstraintFlags&) const = default;
};

struct ClassificationReport {
  std::vector<std::pair<std::string, ConstraintFlags>> per_constraint;
  ConstraintFlags set_flags;  // conjunction over members
  bool np_hard = false;
  // Set-level classes witnessing tractability, in fixed display order.
  std::vector<std::string> witnessing_classes;
  std::string verdict;
};

/// True iff the relation of c is closed under coordinate-wise application of
/// op to every tuple (with repetition) of satisfying assignments.
bool closed_under(const Constraint& c, Polymorphism op);

/// Collects every implied clause of the family and returns the conjunction
/// iff it defines exactly the relation of c; nullopt otherwise.
std::optional<ClauseRepresentation> synthesize_clauses(const Constraint& c, ClauseFamily family);

ConstraintFlags classify_constraint(const Constraint& c);

ClassificationReport classify_set(const ConstraintSet& s);

enum class DeCCloseMode { Id, Not };

/// s extended with ID or NOT; the result is never C-closed. Idempotent.
ConstraintSet de_c_close(const ConstraintSet& s, DeCCloseMode which);

}  // namespace schaefer
