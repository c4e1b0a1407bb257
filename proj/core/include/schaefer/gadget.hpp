#pragma once

#include <optional>
#include <vector>

#include "schaefer/formula.hpp"

namespace schaefer {

/// A perfect implementation of a target constraint over another set:
/// variables 1..r are the target's, r+1..r+a are auxiliary. Perfect means
/// every satisfying assignment of the target extends to one satisfying all
/// applications, and no falsifying assignment does.
struct Gadget {
  Constraint target;
  int aux_count = 0;
  std::vector<ConstraintApplication> applications;  // over vars 1..arity+aux
};

/// Exhaustive check of the gadget invariant over all 2^(r+a) assignments.
bool verify_perfect(const Gadget& g, const ConstraintSet& s, int n_max = kDefaultNMax);

/// Iterative deepening over (aux_count, application_count); within a level,
/// applications are enumerated in canonical order (constraint name, index
/// tuple) with auxiliary variables introduced in first-use order. Returns
/// the first verified gadget, or nullopt when the bounded space is
/// exhausted. Deterministic.
std::optional<Gadget> search_gadget(const Constraint& target, const ConstraintSet& s,
                                    int max_aux, int max_apps, int n_max = kDefaultNMax);

/// Replaces every application of phi by its gadget's applications with fresh
/// auxiliary variables per instance. Gadgets are matched to constraints by
/// truth table and re-verified against s.
Formula reduce_3sat(const Formula& phi, const ConstraintSet& s,
                    const std::vector<Gadget>& library);

/// The 3-literal clause constraint for one polarity pattern, e.g.
/// or3_pattern(false,true,false) is x OR NOT y OR z, named "OR3_PNP".
Constraint or3_pattern(bool neg1, bool neg2, bool neg3);

/// A verified gadget library entry for one clause pattern over
/// {ONE_IN_THREE}: chains exactly-one applications through auxiliary
/// variables, spending a forced-false/forced-true pair only when a literal
/// needs negating.
Gadget or3_gadget_over_one_in_three(bool neg1, bool neg2, bool neg3);

Constraint one_in_three_constraint();

}  // namespace schaefer
