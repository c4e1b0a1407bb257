#pragma once

#include <optional>
#include <utility>

#include "schaefer/formula.hpp"

namespace schaefer {

/// A gap decision problem: is the formula kappa-satisfiable, or is every
/// assignment at most sigma-satisfying?
struct CspQuery {
  Formula formula;
  Fraction kappa{1};
  Fraction sigma{0};
};

enum class CspVerdict { KappaSatisfiable, AtMostSigma, GapViolated };

struct MaxSatResult {
  Fraction fraction;
  Assignment witness;  // smallest maximizer under the little-endian encoding
};

/// Exhaustive maximum over all 2^n assignments. Capacity error when
/// num_vars exceeds n_max.
MaxSatResult max_sat(const Formula& phi, int n_max = kDefaultNMax);

CspVerdict decide_csp(const CspQuery& q, int n_max = kDefaultNMax);

/// Normalized Hamming distance; lengths must match.
Fraction distance(const Assignment& a, const Assignment& b);

/// Minimum distance from a to a fully satisfying assignment, nullopt when
/// the formula is unsatisfiable.
std::optional<Fraction> distance_to_satisfying(const Formula& phi, const Assignment& a,
                                               int n_max = kDefaultNMax);

/// GF(2) elimination over the stacked linear equations of every application.
/// Requires every constraint in phi's set to be linear-equation expressible.
/// Returns an assignment satisfying all applications, or nullopt when the
/// system is inconsistent. Free variables are set to 0.
std::optional<Assignment> linear_attack(const Formula& phi);

}  // namespace schaefer
