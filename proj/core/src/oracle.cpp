#include "schaefer/oracle.hpp"

#include <algorithm>
#include <bit>

#include "schaefer/classify.hpp"
#include "schaefer/errors.hpp"

namespace schaefer {

namespace {

void check_enumeration_capacity(const Formula& phi, int n_max) {
  const int cap = std::min(n_max, kEnumerationCeiling);
  if (phi.num_vars > cap) {
    throw CapacityError("formula has " + std::to_string(phi.num_vars) +
                        " variables, enumeration limit is " + std::to_string(cap));
  }
}

}  // namespace

MaxSatResult max_sat(const Formula& phi, int n_max) {
  check_enumeration_capacity(phi, n_max);
  ResolvedFormula resolved(phi);
  if (resolved.total_weight() <= 0) {
    throw UsageError("formula has no applications to evaluate");
  }
  std::int64_t best = -1;
  std::uint64_t best_code = 0;
  const std::uint64_t end = std::uint64_t{1} << phi.num_vars;
  for (std::uint64_t code = 0; code < end; ++code) {
    const std::int64_t sat = resolved.satisfied_weight(code);
    if (sat > best) {  // strict: ties keep the smallest code
      best = sat;
      best_code = code;
      if (best == resolved.total_weight()) break;  // nothing can beat full weight
    }
  }
  return MaxSatResult{Fraction(best, resolved.total_weight()),
                      Assignment::from_code(best_code, phi.num_vars)};
}

CspVerdict decide_csp(const CspQuery& q, int n_max) {
  if (!(Fraction(0) <= q.sigma && q.sigma < q.kappa && q.kappa <= Fraction(1))) {
    throw UsageError("query requires 0 <= sigma < kappa <= 1");
  }
  const Fraction best = max_sat(q.formula, n_max).fraction;
  if (best >= q.kappa) return CspVerdict::KappaSatisfiable;
  if (best <= q.sigma) return CspVerdict::AtMostSigma;
  return CspVerdict::GapViolated;
}

Fraction distance(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) {
    throw UsageError("distance requires equal lengths, got " + std::to_string(a.size()) +
                     " and " + std::to_string(b.size()));
  }
  if (a.size() == 0) throw UsageError("distance of empty assignments is undefined");
  std::int64_t diff = 0;
  for (int i = 0; i < a.size(); ++i) diff += a[i] != b[i];
  return Fraction(diff, a.size());
}

std::optional<Fraction> distance_to_satisfying(const Formula& phi, const Assignment& a,
                                               int n_max) {
  if (a.size() != phi.num_vars) {
    throw UsageError("assignment length does not match formula variable count");
  }
  check_enumeration_capacity(phi, n_max);
  ResolvedFormula resolved(phi);
  if (resolved.total_weight() <= 0) {
    throw UsageError("formula has no applications to evaluate");
  }
  const std::uint64_t a_code = a.to_code();
  const std::uint64_t end = std::uint64_t{1} << phi.num_vars;
  int best = phi.num_vars + 1;
  for (std::uint64_t code = 0; code < end; ++code) {
    if (resolved.satisfied_weight(code) != resolved.total_weight()) continue;
    best = std::min(best, std::popcount(code ^ a_code));
    if (best == 0) break;
  }
  if (best > phi.num_vars) return std::nullopt;
  return Fraction(best, phi.num_vars);
}

namespace {

// One GF(2) row: coefficient bit per variable plus the right-hand side.
struct Gf2Row {
  std::vector<std::uint64_t> coeff;
  bool rhs = false;

  bool get(int var0) const { return (coeff[var0 >> 6] >> (var0 & 63)) & 1u; }
  void flip(int var0) { coeff[var0 >> 6] ^= std::uint64_t{1} << (var0 & 63); }
  void xor_with(const Gf2Row& other) {
    for (std::size_t w = 0; w < coeff.size(); ++w) coeff[w] ^= other.coeff[w];
    rhs ^= other.rhs;
  }
};

}  // namespace

std::optional<Assignment> linear_attack(const Formula& phi) {
  validate_formula(phi);
  // Canonical linear representations, one per constraint of the set.
  std::vector<std::vector<LinearEquation>> reps(phi.set.constraints.size());
  for (std::size_t ci = 0; ci < phi.set.constraints.size(); ++ci) {
    auto rep = synthesize_clauses(phi.set.constraints[ci], ClauseFamily::LinearEquation);
    if (!rep) {
      throw UsageError("constraint " + phi.set.constraints[ci].name +
                       " is not expressible as a conjunction of linear equations");
    }
    reps[ci] = std::move(rep->equations);
  }

  const int n = phi.num_vars;
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  std::vector<Gf2Row> rows;
  for (const auto& wa : phi.applications) {
    std::size_t ci = 0;
    while (phi.set.constraints[ci].name != wa.app.constraint) ++ci;
    for (const LinearEquation& eq : reps[ci]) {
      Gf2Row row;
      row.coeff.assign(words, 0);
      // Repeated variables cancel mod 2.
      for (int slot : eq.vars) row.flip(wa.app.indices[static_cast<std::size_t>(slot - 1)] - 1);
      row.rhs = eq.parity;
      rows.push_back(std::move(row));
    }
  }

  // Gauss-Jordan to reduced row echelon form.
  std::vector<int> pivot_of_row;
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].get(col)) rows[r].xor_with(rows[rank]);
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  // Rows past the rank have all-zero coefficients; a surviving rhs of 1 is
  // the contradiction 0 = 1.
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].rhs) return std::nullopt;
  }

  // Free variables stay 0, so each pivot variable equals its row's rhs.
  Assignment solution = Assignment::from_code(0, n);
  for (std::size_t r = 0; r < rank; ++r) {
    solution.bits[static_cast<std::size_t>(pivot_of_row[r])] = rows[r].rhs;
  }
  return solution;
}

}  // namespace schaefer
