#include "schaefer/adversary.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <utility>

#include "schaefer/errors.hpp"
#include "schaefer/oracle.hpp"

namespace schaefer {

namespace {

// x_i^j with 1-based i in [n], j in [m].
int block_var(int i, int j, int n) { return (j - 1) * n + i; }

Constraint imp_constraint() { return make_constraint("IMP", 2, "1011"); }       // ~x | y
Constraint nand2_constraint() { return make_constraint("NAND", 2, "1110"); }    // ~x | ~y
Constraint eq2_constraint() { return make_constraint("EQ2", 2, "1001"); }       // x = y

Constraint nand3_constraint() {
  return make_constraint("NAND3", 3, "11111110");  // ~x | ~y | ~z
}

// Parity constraint of arity m: satisfied iff an odd number of inputs is 1.
Constraint odd_parity_constraint(int m) {
  std::string bits(std::size_t{1} << m, '0');
  for (std::uint32_t p = 0; p < bits.size(); ++p) {
    if (std::popcount(p) % 2 == 1) bits[p] = '1';
  }
  return make_constraint("ODD" + std::to_string(m), m, bits);
}

// x_1 | ... | x_m.
Constraint or_constraint(int m) {
  std::string bits(std::size_t{1} << m, '1');
  bits[0] = '0';
  return make_constraint("OR" + std::to_string(m), m, bits);
}

// ~x_1 | ... | ~x_m.
Constraint nand_constraint(int m) {
  std::string bits(std::size_t{1} << m, '1');
  bits.back() = '0';
  return make_constraint("NAND" + std::to_string(m), m, bits);
}

void check_block_spec(const BlockSpec& spec) {
  if (spec.block_size < 1) throw UsageError("block size must be at least 1");
  const int min_blocks = spec.mode == BlockMode::Pairwise ? 2 : 3;
  if (spec.num_blocks < min_blocks) {
    throw UsageError("mode requires at least " + std::to_string(min_blocks) + " blocks");
  }
}

}  // namespace

OneHotFormula gen_onehot_formula(const BlockSpec& spec) {
  check_block_spec(spec);
  const int n = spec.block_size;
  const int m = spec.num_blocks;

  OneHotFormula out;
  Formula& phi = out.formula;
  phi.num_vars = n * m;

  std::vector<Constraint> constraints{imp_constraint()};
  if (spec.mode == BlockMode::Pairwise) {
    constraints.push_back(nand2_constraint());
  } else {
    constraints.push_back(nand3_constraint());
  }
  phi.set = make_constraint_set(std::move(constraints));

  // Within-block equalities x_i^j = x_{i'}^j as implication pairs.
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= n; ++i) {
      for (int i2 = i + 1; i2 <= n; ++i2) {
        const int u = block_var(i, j, n);
        const int v = block_var(i2, j, n);
        phi.applications.push_back({{"IMP", {u, v}}, 1});
        phi.applications.push_back({{"IMP", {v, u}}, 1});
      }
    }
  }
  if (spec.mode == BlockMode::Pairwise) {
    // At most one true variable across distinct blocks.
    for (int j = 1; j <= m; ++j) {
      for (int j2 = j + 1; j2 <= m; ++j2) {
        for (int i = 1; i <= n; ++i) {
          for (int i2 = 1; i2 <= n; ++i2) {
            phi.applications.push_back(
                {{"NAND", {block_var(i, j, n), block_var(i2, j2, n)}}, 1});
          }
        }
      }
    }
    out.satisfying.push_back(Assignment::from_code(0, phi.num_vars));
    for (int j = 1; j <= m; ++j) {
      Assignment alpha = Assignment::from_code(0, phi.num_vars);
      for (int i = 1; i <= n; ++i) alpha.bits[block_var(i, j, n) - 1] = true;
      out.satisfying.push_back(std::move(alpha));
    }
  } else {
    // At most two true variables across three distinct blocks.
    for (int j = 1; j <= m; ++j) {
      for (int j2 = j + 1; j2 <= m; ++j2) {
        for (int j3 = j2 + 1; j3 <= m; ++j3) {
          for (int i = 1; i <= n; ++i) {
            for (int i2 = 1; i2 <= n; ++i2) {
              for (int i3 = 1; i3 <= n; ++i3) {
                phi.applications.push_back({{"NAND3",
                                             {block_var(i, j, n), block_var(i2, j2, n),
                                              block_var(i3, j3, n)}},
                                            1});
              }
            }
          }
        }
      }
    }
    out.satisfying.push_back(Assignment::from_code(0, phi.num_vars));
    for (int j = 1; j <= m; ++j) {
      for (int k = j; k <= m; ++k) {
        Assignment alpha = Assignment::from_code(0, phi.num_vars);
        for (int i = 1; i <= n; ++i) {
          alpha.bits[block_var(i, j, n) - 1] = true;
          alpha.bits[block_var(i, k, n) - 1] = true;
        }
        out.satisfying.push_back(std::move(alpha));
      }
    }
  }
  return out;
}

Assignment WitnessPair::full() const {
  Assignment a = base;
  a.bits.insert(a.bits.end(), proof.bits.begin(), proof.bits.end());
  return a;
}

namespace {

void check_witness_shape(const Formula& psi, const std::vector<WitnessPair>& witnesses) {
  if (witnesses.empty()) throw UsageError("at least one witness is required");
  const int base_len = witnesses[0].base.size();
  const int proof_len = witnesses[0].proof.size();
  for (const WitnessPair& w : witnesses) {
    if (w.base.size() != base_len || w.proof.size() != proof_len) {
      throw UsageError("witnesses must share base and proof lengths");
    }
  }
  if (base_len + proof_len != psi.num_vars) {
    throw UsageError("witness length " + std::to_string(base_len + proof_len) +
                     " does not match formula variable count " + std::to_string(psi.num_vars));
  }
}

}  // namespace

PruneResult prune(const Formula& psi, const std::vector<WitnessPair>& witnesses) {
  check_witness_shape(psi, witnesses);
  ResolvedFormula resolved(psi);
  if (resolved.total_weight() <= 0) throw UsageError("cannot prune an empty formula");

  std::vector<Assignment> fulls;
  fulls.reserve(witnesses.size());
  for (const WitnessPair& w : witnesses) fulls.push_back(w.full());

  PruneResult out;
  out.formula.num_vars = psi.num_vars;
  out.formula.set = psi.set;
  std::int64_t kept = 0;
  for (const auto& wa : psi.applications) {
    const Constraint& c = psi.set.at(wa.app.constraint);
    const bool keep = std::all_of(fulls.begin(), fulls.end(), [&](const Assignment& a) {
      std::uint32_t p = 0;
      for (std::size_t j = 0; j < wa.app.indices.size(); ++j) {
        if (a[wa.app.indices[j] - 1]) p |= 1u << j;
      }
      return c.table[p];
    });
    if (keep) {
      out.formula.applications.push_back(wa);
      kept += wa.weight;
    }
  }
  out.kept_weight_fraction = Fraction(kept, psi.total_weight());
  return out;
}

namespace {

Assignment combine(const std::vector<WitnessPair>& witnesses, char op) {
  if (witnesses.empty()) throw UsageError("cannot combine an empty witness list");
  Assignment acc = witnesses[0].full();
  for (std::size_t i = 1; i < witnesses.size(); ++i) {
    const Assignment a = witnesses[i].full();
    if (a.size() != acc.size()) throw UsageError("witnesses must share lengths");
    for (int j = 0; j < acc.size(); ++j) {
      const bool x = acc[j];
      const bool y = a[j];
      acc.bits[static_cast<std::size_t>(j)] = op == '^' ? (x != y) : op == '|' ? (x || y)
                                                                               : (x && y);
    }
  }
  return acc;
}

}  // namespace

Assignment combine_xor(const std::vector<WitnessPair>& witnesses) {
  if (witnesses.size() % 2 == 0) {
    throw UsageError("XOR combination requires an odd witness count");
  }
  return combine(witnesses, '^');
}

Assignment combine_or(const std::vector<WitnessPair>& witnesses) {
  return combine(witnesses, '|');
}

Assignment combine_and(const std::vector<WitnessPair>& witnesses) {
  return combine(witnesses, '&');
}

SymMatrix::SymMatrix(int m) : m_(m), cells_(static_cast<std::size_t>(m) * m, false) {}

bool SymMatrix::at(int p, int q) const {
  return cells_[static_cast<std::size_t>(p) * m_ + q];
}

void SymMatrix::set(int p, int q, bool v) {
  cells_[static_cast<std::size_t>(p) * m_ + q] = v;
  cells_[static_cast<std::size_t>(q) * m_ + p] = v;
}

int SymMatrix::count_ones() const {
  return static_cast<int>(std::count(cells_.begin(), cells_.end(), true));
}

SymMatrix SymMatrix::complement() const {
  SymMatrix out(m_);
  for (std::size_t i = 0; i < cells_.size(); ++i) out.cells_[i] = !cells_[i];
  return out;
}

SymMatrix block_indicator_matrix(int j, int m) {
  SymMatrix d(m);
  for (int t = 0; t < m; ++t) {
    d.set(j, t, true);
  }
  return d;
}

bool leq(const SymMatrix& a, const SymMatrix& b) {
  for (int p = 0; p < a.size(); ++p) {
    for (int q = 0; q < a.size(); ++q) {
      if (a.at(p, q) && !b.at(p, q)) return false;
    }
  }
  return true;
}

bool proof_bit_for_class(const SymMatrix& a) {
  const int m = a.size();
  bool rule1 = false;
  bool rule2 = false;
  for (int j = 0; j < m; ++j) {
    const SymMatrix dj = block_indicator_matrix(j, m);
    if (leq(dj, a)) rule1 = true;
    if (leq(a, dj.complement())) rule2 = true;
  }
  if (rule1 && rule2) {
    throw InvariantViolation("class matrix satisfies both D^j <= A and A <= 1-D^j");
  }
  if (rule1) return true;
  if (rule2) return false;
  return 2 * a.count_ones() > m * m;  // m odd, so m^2 entries never tie
}

int pair_index(int j, int k, int m) {
  // Row-major over 0 <= j <= k < m.
  return j * m - j * (j - 1) / 2 + (k - j);
}

int pair_count(int m) { return m * (m + 1) / 2; }

namespace {

// Literal-level matrix/value view; a negated literal complements both.
struct LiteralView {
  SymMatrix matrix;
  bool value;
};

}  // namespace

Assignment construct_2cnf_proof(const Formula& pruned_psi,
                                const std::vector<WitnessPair>& pair_witnesses, int m,
                                std::vector<MatrixClass>* classes_out) {
  if (m < 3 || m % 2 == 0) {
    throw InvariantViolation("the 2CNF construction requires an odd m >= 3");
  }
  if (static_cast<int>(pair_witnesses.size()) != pair_count(m)) {
    throw InvariantViolation("expected " + std::to_string(pair_count(m)) +
                             " pair witnesses, got " + std::to_string(pair_witnesses.size()));
  }
  check_witness_shape(pruned_psi, pair_witnesses);

  std::vector<Assignment> fulls;
  fulls.reserve(pair_witnesses.size());
  for (const WitnessPair& w : pair_witnesses) fulls.push_back(w.full());

  // V(z): the matrix of values z takes across the pair witnesses.
  const int num_vars = pruned_psi.num_vars;
  std::vector<SymMatrix> value_matrix(static_cast<std::size_t>(num_vars));
  for (int z = 0; z < num_vars; ++z) {
    SymMatrix v(m);
    for (int j = 0; j < m; ++j) {
      for (int k = j; k < m; ++k) {
        v.set(j, k, fulls[static_cast<std::size_t>(pair_index(j, k, m))][z]);
      }
    }
    value_matrix[static_cast<std::size_t>(z)] = std::move(v);
  }

  std::map<SymMatrix, MatrixClass> classes;
  for (int z = 0; z < num_vars; ++z) {
    const SymMatrix& v = value_matrix[static_cast<std::size_t>(z)];
    auto [it, inserted] = classes.try_emplace(v);
    if (inserted) {
      it->second.matrix = v;
      it->second.value = proof_bit_for_class(v);
    }
    it->second.members.push_back(z + 1);
  }

  Assignment result = Assignment::from_code(0, num_vars);
  for (const auto& [matrix, cls] : classes) {
    for (int var : cls.members) result.bits[static_cast<std::size_t>(var - 1)] = cls.value;
  }

  // Complement classes must receive opposite values.
  for (const auto& [matrix, cls] : classes) {
    const auto other = classes.find(matrix.complement());
    if (other != classes.end() && other->second.value == cls.value) {
      throw InvariantViolation("complement classes received equal values");
    }
  }

  // Every implication edge of the pruned formula must run from V_A to V_B
  // with A <= B, and must be satisfied by the constructed assignment.
  const auto literal_view = [&](int var, bool negated) {
    LiteralView view{value_matrix[static_cast<std::size_t>(var - 1)], result[var - 1]};
    if (negated) {
      view.matrix = view.matrix.complement();
      view.value = !view.value;
    }
    return view;
  };
  const auto check_edge = [&](const Literal& from, const Literal& to) {
    const LiteralView a = literal_view(from.var, from.negated);
    const LiteralView b = literal_view(to.var, to.negated);
    if (!leq(a.matrix, b.matrix)) {
      throw InvariantViolation("implication edge violates the class order A <= B");
    }
    if (a.value && !b.value) {
      throw InvariantViolation("implication edge unsatisfied by the constructed proof");
    }
  };
  for (const auto& wa : pruned_psi.applications) {
    const Constraint& c = pruned_psi.set.at(wa.app.constraint);
    const auto rep = synthesize_clauses(c, ClauseFamily::TwoClause);
    if (!rep) {
      throw UsageError("constraint " + c.name + " is not 2CNF expressible");
    }
    for (const Clause& clause : rep->clauses) {
      // Substitute formula variables for the constraint's slots.
      auto substituted = [&](const Literal& lit) {
        return Literal{wa.app.indices[static_cast<std::size_t>(lit.var - 1)], lit.negated};
      };
      if (clause.literals.size() == 1) {
        const Literal l = substituted(clause.literals[0]);
        check_edge(Literal{l.var, !l.negated}, l);
      } else {
        const Literal l1 = substituted(clause.literals[0]);
        const Literal l2 = substituted(clause.literals[1]);
        check_edge(Literal{l1.var, !l1.negated}, l2);
        check_edge(Literal{l2.var, !l2.negated}, l1);
      }
    }
  }

  if (classes_out) {
    classes_out->clear();
    for (const auto& [matrix, cls] : classes) classes_out->push_back(cls);
  }
  return result;
}

std::string to_string(AttackClass cls) {
  switch (cls) {
    case AttackClass::Linear: return "linear";
    case AttackClass::WeaklyPositive: return "weakly-positive";
    case AttackClass::WeaklyNegative: return "weakly-negative";
    case AttackClass::TwoCnf: return "2cnf";
  }
  return "?";
}

std::optional<AttackClass> parse_attack_class(const std::string& text) {
  if (text == "linear") return AttackClass::Linear;
  if (text == "weakly-positive") return AttackClass::WeaklyPositive;
  if (text == "weakly-negative") return AttackClass::WeaklyNegative;
  if (text == "2cnf") return AttackClass::TwoCnf;
  return std::nullopt;
}

AttackResult run_attack(AttackClass cls, const Formula& psi,
                        const std::vector<WitnessPair>& witnesses,
                        const std::vector<Assignment>& alphas) {
  check_witness_shape(psi, witnesses);
  const int base_len = witnesses[0].base.size();
  for (const Assignment& alpha : alphas) {
    if (alpha.size() != base_len) {
      throw UsageError("alpha length does not match the witness base length");
    }
  }

  const ClassificationReport report = classify_set(psi.set);
  const bool has_flag = cls == AttackClass::Linear            ? report.set_flags.linear
                        : cls == AttackClass::WeaklyPositive  ? report.set_flags.weakly_positive
                        : cls == AttackClass::WeaklyNegative  ? report.set_flags.weakly_negative
                                                              : report.set_flags.two_cnf;
  if (!has_flag) {
    throw UsageError("the formula's constraint set does not carry the " + to_string(cls) +
                     " flag");
  }

  int m = 0;
  if (cls == AttackClass::Linear && witnesses.size() % 2 == 0) {
    throw UsageError("the linear attack requires an odd witness count");
  }
  if (cls == AttackClass::TwoCnf) {
    // Witness count m(m+1)/2 determines m, which must be odd.
    while (pair_count(m + 1) <= static_cast<int>(witnesses.size())) ++m;
    if (pair_count(m) != static_cast<int>(witnesses.size()) || m % 2 == 0 || m < 3) {
      throw UsageError("the 2CNF attack requires m(m+1)/2 pair witnesses for an odd m >= 3");
    }
  }

  AttackResult result;
  for (const WitnessPair& w : witnesses) {
    result.epsilon_per_witness.push_back(Fraction(1) - evaluate(psi, w.full()));
  }

  PruneResult pruned = prune(psi, witnesses);
  result.pruned_weight_fraction = pruned.kept_weight_fraction;
  if (pruned.formula.applications.empty()) {
    throw InvariantViolation("pruning removed every application");
  }

  switch (cls) {
    case AttackClass::Linear:
      result.combined = combine_xor(witnesses);
      break;
    case AttackClass::WeaklyPositive:
      result.combined = combine_or(witnesses);
      break;
    case AttackClass::WeaklyNegative:
      result.combined = combine_and(witnesses);
      break;
    case AttackClass::TwoCnf:
      result.combined = construct_2cnf_proof(pruned.formula, witnesses, m);
      break;
  }

  result.satisfied_fraction_pruned = evaluate(pruned.formula, result.combined);
  if (result.satisfied_fraction_pruned != Fraction(1)) {
    throw InvariantViolation("combined assignment does not fully satisfy the pruned formula");
  }
  result.satisfied_fraction_original = evaluate(psi, result.combined);

  Assignment beta;
  beta.bits.assign(result.combined.bits.begin(), result.combined.bits.begin() + base_len);
  for (const Assignment& alpha : alphas) result.distances.push_back(distance(beta, alpha));

  if (cls == AttackClass::TwoCnf) {
    Fraction max_eps(0);
    for (const Fraction& eps : result.epsilon_per_witness) max_eps = std::max(max_eps, eps);
    result.bound = Fraction(1) - Fraction(pair_count(m)) * max_eps;
  } else {
    Fraction sum(0);
    for (const Fraction& eps : result.epsilon_per_witness) sum += eps;
    result.bound = Fraction(1) - sum;
  }
  return result;
}

Formula double_formula(const Formula& phi, ForceHalf force) {
  validate_formula(phi);
  Formula out;
  out.num_vars = 2 * phi.num_vars;
  out.set = de_c_close(phi.set, force == ForceHalf::TrueHalf ? DeCCloseMode::Id
                                                             : DeCCloseMode::Not);
  out.applications = phi.applications;
  const std::string unit = force == ForceHalf::TrueHalf ? "ID" : "NOT";
  for (int i = phi.num_vars + 1; i <= out.num_vars; ++i) {
    out.applications.push_back({{unit, {i}}, 1});
  }
  return out;
}

namespace {

struct DemoLayout {
  int n = 0;
  int m = 0;
  std::int64_t structural_weight = 1;
  std::int64_t aux_weight = 1;
};

void check_demo_params(const DemoLayout& d, bool odd_m) {
  if (d.n < 1) throw UsageError("demo requires n >= 1");
  if (d.m < 2) throw UsageError("demo requires m >= 2");
  if (odd_m && d.m % 2 == 0) throw UsageError("demo requires an odd m");
  if (d.m > kDefaultMaxArity) {
    throw CapacityError("demo block count exceeds the arity limit");
  }
  if (d.structural_weight < 1 || d.aux_weight < 1) {
    throw UsageError("demo weights must be positive");
  }
}

// Shared skeleton of the pairwise demos: one anchor application per block
// row i (arity-m constraint over x_i^1..x_i^m), within-block equalities, and
// one EQ2 link per block from x_1^j to the proof bit pi_j.
AttackDemo pairwise_demo(const DemoLayout& d, const Constraint& anchor, bool negate) {
  AttackDemo demo;
  demo.block_size = d.n;
  demo.num_blocks = d.m;
  const int base = d.n * d.m;

  Formula& psi = demo.psi;
  psi.num_vars = base + d.m;  // one proof bit per block
  psi.set = make_constraint_set({anchor, eq2_constraint()});

  for (int i = 1; i <= d.n; ++i) {
    ConstraintApplication app;
    app.constraint = anchor.name;
    for (int j = 1; j <= d.m; ++j) app.indices.push_back(block_var(i, j, d.n));
    psi.applications.push_back({std::move(app), d.structural_weight});
  }
  for (int j = 1; j <= d.m; ++j) {
    for (int i = 1; i <= d.n; ++i) {
      for (int i2 = i + 1; i2 <= d.n; ++i2) {
        psi.applications.push_back(
            {{"EQ2", {block_var(i, j, d.n), block_var(i2, j, d.n)}}, d.structural_weight});
      }
    }
  }
  for (int j = 1; j <= d.m; ++j) {
    psi.applications.push_back({{"EQ2", {block_var(1, j, d.n), base + j}}, d.aux_weight});
  }

  for (int j = 1; j <= d.m; ++j) {
    WitnessPair w;
    w.base = Assignment::from_code(0, base);
    for (int i = 1; i <= d.n; ++i) w.base.bits[block_var(i, j, d.n) - 1] = true;
    w.proof = Assignment::from_code(0, d.m);
    w.proof.bits[static_cast<std::size_t>(j - 1)] = true;
    if (negate) {
      w.base.bits.flip();
      w.proof.bits.flip();
    }
    demo.alphas.push_back(w.base);
    demo.witnesses.push_back(std::move(w));
    demo.perturb_bit.push_back(j - 1);
  }
  return demo;
}

}  // namespace

AttackDemo make_linear_demo(int n, int m, std::int64_t structural_weight,
                            std::int64_t aux_weight) {
  const DemoLayout d{n, m, structural_weight, aux_weight};
  check_demo_params(d, /*odd_m=*/true);
  return pairwise_demo(d, odd_parity_constraint(m), /*negate=*/false);
}

AttackDemo make_monotone_demo(int n, int m, bool positive, std::int64_t structural_weight,
                              std::int64_t aux_weight) {
  const DemoLayout d{n, m, structural_weight, aux_weight};
  check_demo_params(d, /*odd_m=*/false);
  if (positive) return pairwise_demo(d, or_constraint(m), /*negate=*/false);
  return pairwise_demo(d, nand_constraint(m), /*negate=*/true);
}

AttackDemo make_two_cnf_demo(int n, int m, std::int64_t structural_weight,
                             std::int64_t aux_weight) {
  const DemoLayout d{n, m, structural_weight, aux_weight};
  check_demo_params(d, /*odd_m=*/true);
  if (m < 3) throw UsageError("the 2CNF demo requires m >= 3");

  AttackDemo demo;
  demo.block_size = n;
  demo.num_blocks = m;
  const int base = n * m;
  // Proof layout: pi_1..pi_m, then sigma ([j != k]), tau (always 1),
  // rho (always 0), iota ([j == k]).
  const int proof_len = m + 4;
  const int sigma = base + m + 1;
  const int tau = base + m + 2;
  const int rho = base + m + 3;
  const int iota = base + m + 4;

  Formula& psi = demo.psi;
  psi.num_vars = base + proof_len;
  psi.set = make_constraint_set({eq2_constraint(), imp_constraint()});

  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= n; ++i) {
      for (int i2 = i + 1; i2 <= n; ++i2) {
        psi.applications.push_back(
            {{"EQ2", {block_var(i, j, n), block_var(i2, j, n)}}, structural_weight});
      }
    }
  }
  psi.applications.push_back({{"IMP", {rho, block_var(1, 1, n)}}, structural_weight});
  psi.applications.push_back({{"IMP", {sigma, tau}}, structural_weight});
  psi.applications.push_back({{"IMP", {iota, tau}}, structural_weight});
  for (int j = 1; j <= m; ++j) {
    psi.applications.push_back({{"EQ2", {block_var(1, j, n), base + j}}, aux_weight});
  }

  for (int j = 1; j <= m; ++j) {
    for (int k = j; k <= m; ++k) {
      WitnessPair w;
      w.base = Assignment::from_code(0, base);
      for (int i = 1; i <= n; ++i) {
        w.base.bits[block_var(i, j, n) - 1] = true;
        w.base.bits[block_var(i, k, n) - 1] = true;
      }
      w.proof = Assignment::from_code(0, proof_len);
      w.proof.bits[static_cast<std::size_t>(j - 1)] = true;
      w.proof.bits[static_cast<std::size_t>(k - 1)] = true;
      w.proof.bits[static_cast<std::size_t>(sigma - base - 1)] = (j != k);
      w.proof.bits[static_cast<std::size_t>(tau - base - 1)] = true;
      w.proof.bits[static_cast<std::size_t>(iota - base - 1)] = (j == k);
      if (j < k) demo.alphas.push_back(w.base);
      demo.witnesses.push_back(std::move(w));
      demo.perturb_bit.push_back(j - 1);  // flipping pi_j breaks one EQ2 link
    }
  }
  return demo;
}

void perturb_witness(AttackDemo& demo, int witness_index) {
  if (witness_index < 0 || witness_index >= static_cast<int>(demo.witnesses.size())) {
    throw UsageError("witness index out of range");
  }
  auto& w = demo.witnesses[static_cast<std::size_t>(witness_index)];
  const int bit = demo.perturb_bit[static_cast<std::size_t>(witness_index)];
  w.proof.bits[static_cast<std::size_t>(bit)] = !w.proof.bits[static_cast<std::size_t>(bit)];
}

}  // namespace schaefer
