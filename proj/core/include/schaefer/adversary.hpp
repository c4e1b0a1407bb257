#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schaefer/classify.hpp"
#include "schaefer/formula.hpp"

namespace schaefer {

enum class BlockMode { Pairwise, Triplewise };

/// m blocks of n variables; variable x_i^j lives at index (j-1)*n + i.
struct BlockSpec {
  int block_size = 1;   // n
  int num_blocks = 2;   // m
  BlockMode mode = BlockMode::Pairwise;
};

struct OneHotFormula {
  Formula formula;
  // Every fully satisfying assignment: all-zero first, then block indicators
  // ascending (pairwise), or the pair indicators alpha_{j,k} with j <= k in
  // row-major order (triplewise).
  std::vector<Assignment> satisfying;
};

/// The 2CNF counterexample formula: within-block equalities plus "at most
/// one true across blocks" (pairwise) or "at most two true across three
/// distinct blocks" (triplewise).
OneHotFormula gen_onehot_formula(const BlockSpec& spec);

/// An (assignment, proof) pair. All witnesses of one attack share the same
/// base and proof lengths.
struct WitnessPair {
  Assignment base;
  Assignment proof;

  Assignment full() const;
  bool operator==(const WitnessPair&) const = default;
};

struct PruneResult {
  Formula formula;  // applications each witness satisfies, original order
  Fraction kept_weight_fraction;
};

/// Drops every application unsatisfied by at least one witness.
PruneResult prune(const Formula& psi, const std::vector<WitnessPair>& witnesses);

// Coordinate-wise combinations over the concatenated (base||proof) vectors.
Assignment combine_xor(const std::vector<WitnessPair>& witnesses);  // odd count
Assignment combine_or(const std::vector<WitnessPair>& witnesses);
Assignment combine_and(const std::vector<WitnessPair>& witnesses);

/// Symmetric m x m 0/1 matrix of the values one variable takes across the
/// pair-indexed witnesses.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int m);

  int size() const { return m_; }
  bool at(int p, int q) const;        // 0-based
  void set(int p, int q, bool v);     // writes both (p,q) and (q,p)
  int count_ones() const;
  SymMatrix complement() const;

  bool operator==(const SymMatrix&) const = default;
  auto operator<=>(const SymMatrix&) const = default;

 private:
  int m_ = 0;
  std::vector<bool> cells_;
};

/// D^j: entry (p,q) = 1 iff j is one of p,q. 0-based j.
SymMatrix block_indicator_matrix(int j, int m);

bool leq(const SymMatrix& a, const SymMatrix& b);  // entrywise <=

/// The proof value the construction gives every variable of one class:
/// rule 1, some D^j <= A -> 1; rule 2, some A <= 1-D^j -> 0; rule 3,
/// majority of the m^2 entries (odd for odd m).
bool proof_bit_for_class(const SymMatrix& a);

struct MatrixClass {
  SymMatrix matrix;
  std::vector<int> members;  // 1-based variable indices
  bool value = false;
};

/// Row-major index of the unordered pair (j,k), 0 <= j <= k < m, within the
/// canonical witness ordering (0,0),(0,1),...,(0,m-1),(1,1),...
int pair_index(int j, int k, int m);
int pair_count(int m);

/// Builds the full (beta, pi) assignment for a pruned 2CNF formula from the
/// pair-indexed witnesses (row-major, j <= k, symmetric by construction).
/// Verifies that every implication edge runs between classes with A <= B and
/// that no class satisfies D^j <= A <= 1-D^j; violations raise
/// InvariantViolation. classes_out, when given, receives the partition.
Assignment construct_2cnf_proof(const Formula& pruned_psi,
                                const std::vector<WitnessPair>& pair_witnesses, int m,
                                std::vector<MatrixClass>* classes_out = nullptr);

enum class AttackClass { Linear, WeaklyPositive, WeaklyNegative, TwoCnf };

std::string to_string(AttackClass cls);
std::optional<AttackClass> parse_attack_class(const std::string& text);

struct AttackResult {
  Fraction pruned_weight_fraction;
  Assignment combined;  // (beta, pi)
  Fraction satisfied_fraction_pruned;    // always exactly 1 on success
  Fraction satisfied_fraction_original;
  std::vector<Fraction> distances;             // distance(beta, alpha_j)
  std::vector<Fraction> epsilon_per_witness;   // violated weight fractions
  Fraction bound;  // 1 - sum eps (pairwise) or 1 - m(m+1)/2 * max eps (2CNF)
};

/// prune -> class-dispatched combination -> evaluation and distance report.
/// The formula's set must carry the requested class flag; the combination
/// must fully satisfy the pruned formula or InvariantViolation is raised.
/// For TwoCnf the witnesses are the canonical pair ordering and their count
/// must equal m(m+1)/2 for an odd m.
AttackResult run_attack(AttackClass cls, const Formula& psi,
                        const std::vector<WitnessPair>& witnesses,
                        const std::vector<Assignment>& alphas);

enum class ForceHalf { TrueHalf, FalseHalf };

/// The C-closed transform: doubles the variables, keeps the original
/// applications on the first half and pins the second half all-true (unit ID
/// applications) or all-false (unit NOT applications).
Formula double_formula(const Formula& phi, ForceHalf force);

/// A ready-to-run attack instance: a formula in the target class over the
/// block variables plus proof variables, the exact witnesses, and the base
/// assignments used for distance reporting. Each witness owns one dedicated
/// proof bit whose flip violates exactly one application of weight
/// aux_weight.
struct AttackDemo {
  Formula psi;
  std::vector<WitnessPair> witnesses;
  std::vector<Assignment> alphas;
  std::vector<int> perturb_bit;  // 0-based index into the proof part
  int block_size = 0;
  int num_blocks = 0;
};

AttackDemo make_linear_demo(int n, int m, std::int64_t structural_weight = 1,
                            std::int64_t aux_weight = 1);
// positive=true: dual-Horn encoding, OR combination; positive=false: the
// negated (Horn) encoding, AND combination.
AttackDemo make_monotone_demo(int n, int m, bool positive, std::int64_t structural_weight = 1,
                              std::int64_t aux_weight = 1);
AttackDemo make_two_cnf_demo(int n, int m, std::int64_t structural_weight = 1,
                             std::int64_t aux_weight = 1);

/// Flips the dedicated proof bit of one witness.
void perturb_witness(AttackDemo& demo, int witness_index);

}  // namespace schaefer
