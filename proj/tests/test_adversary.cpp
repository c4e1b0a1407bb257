#include <doctest.h>

#include <algorithm>

#include "schaefer/adversary.hpp"
#include "schaefer/errors.hpp"
#include "schaefer/oracle.hpp"
#include "test_helpers.hpp"

using namespace schaefer;
using namespace schaefer::testing;

namespace {

// Exhaustive recomputation of the fully satisfying set.
std::vector<Assignment> enumerate_satisfying(const Formula& phi) {
  std::vector<Assignment> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << phi.num_vars); ++code) {
    const Assignment a = Assignment::from_code(code, phi.num_vars);
    if (evaluate(phi, a) == Fraction(1)) out.push_back(a);
  }
  return out;
}

bool same_assignments(std::vector<Assignment> a, std::vector<Assignment> b) {
  const auto key = [](const Assignment& x) { return x.to_string(); };
  std::sort(a.begin(), a.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
  std::sort(b.begin(), b.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
  return a == b;
}

WitnessPair witness_of(const Assignment& base) { return WitnessPair{base, {}}; }

}  // namespace

TEST_CASE("gen_onehot_formula produces exactly the one-hot satisfying sets") {
  const OneHotFormula tiny = gen_onehot_formula(BlockSpec{1, 2, BlockMode::Pairwise});
  CHECK(tiny.formula.applications.size() == 1);
  CHECK(same_assignments(tiny.satisfying, {Assignment::from_string("00"),
                                           Assignment::from_string("10"),
                                           Assignment::from_string("01")}));
  CHECK(same_assignments(tiny.satisfying, enumerate_satisfying(tiny.formula)));

  const OneHotFormula pairwise = gen_onehot_formula(BlockSpec{2, 3, BlockMode::Pairwise});
  CHECK(pairwise.satisfying.size() == 4);  // alpha_0 .. alpha_3
  CHECK(same_assignments(pairwise.satisfying, enumerate_satisfying(pairwise.formula)));

  const OneHotFormula triple = gen_onehot_formula(BlockSpec{1, 3, BlockMode::Triplewise});
  CHECK(triple.formula.applications.size() == 1);
  std::vector<Assignment> expected;
  for (std::uint64_t code = 0; code < 8; ++code) {
    if (code != 7) expected.push_back(Assignment::from_code(code, 3));
  }
  CHECK(same_assignments(triple.satisfying, expected));
  CHECK(same_assignments(triple.satisfying, enumerate_satisfying(triple.formula)));

  const OneHotFormula triple_n2 = gen_onehot_formula(BlockSpec{2, 3, BlockMode::Triplewise});
  CHECK(same_assignments(triple_n2.satisfying, enumerate_satisfying(triple_n2.formula)));

  CHECK_THROWS_AS(gen_onehot_formula(BlockSpec{1, 1, BlockMode::Pairwise}), UsageError);
  CHECK_THROWS_AS(gen_onehot_formula(BlockSpec{1, 2, BlockMode::Triplewise}), UsageError);
}

TEST_CASE("prune drops applications any witness violates") {
  Formula psi;
  psi.num_vars = 2;
  psi.set = make_constraint_set({or2(), xor2(), and2()});
  psi.applications.push_back({{"OR2", {1, 2}}, 1});
  psi.applications.push_back({{"AND2", {1, 2}}, 1});
  psi.applications.push_back({{"XOR2", {1, 2}}, 1});

  const std::vector<WitnessPair> witnesses{witness_of(Assignment::from_string("10"))};
  const PruneResult pruned = prune(psi, witnesses);
  CHECK(pruned.formula.applications.size() == 2);  // AND2 violated
  CHECK(pruned.kept_weight_fraction == Fraction(2, 3));
  CHECK(pruned.formula.applications[0].app.constraint == "OR2");
  CHECK(pruned.formula.applications[1].app.constraint == "XOR2");

  // Fully satisfying witnesses keep everything.
  const std::vector<WitnessPair> good{witness_of(Assignment::from_string("10")),
                                      witness_of(Assignment::from_string("01"))};
  Formula sym;
  sym.num_vars = 2;
  sym.set = make_constraint_set({or2(), xor2()});
  sym.applications.push_back({{"OR2", {1, 2}}, 3});
  sym.applications.push_back({{"XOR2", {1, 2}}, 5});
  const PruneResult untouched = prune(sym, good);
  CHECK(untouched.kept_weight_fraction == Fraction(1));
  CHECK(untouched.formula.applications.size() == 2);

  // Disjoint violated slices obey the union bound.
  Formula sliced;
  sliced.num_vars = 2;
  sliced.set = make_constraint_set({id_constraint(), not_constraint(), or2()});
  sliced.applications.push_back({{"OR2", {1, 2}}, 8});
  sliced.applications.push_back({{"ID", {1}}, 1});   // violated by 01
  sliced.applications.push_back({{"ID", {2}}, 1});   // violated by 10
  const std::vector<WitnessPair> two{witness_of(Assignment::from_string("10")),
                                     witness_of(Assignment::from_string("01"))};
  const PruneResult both = prune(sliced, two);
  CHECK(both.kept_weight_fraction == Fraction(8, 10));
  Fraction eps_sum(0);
  for (const WitnessPair& w : two) eps_sum += Fraction(1) - evaluate(sliced, w.full());
  CHECK(both.kept_weight_fraction >= Fraction(1) - eps_sum);
}

TEST_CASE("coordinate-wise combinations") {
  const std::vector<WitnessPair> ws{witness_of(Assignment::from_string("10")),
                                    witness_of(Assignment::from_string("01")),
                                    witness_of(Assignment::from_string("10"))};
  CHECK(combine_xor(ws).to_string() == "01");
  CHECK(combine_or({ws[0], ws[1]}).to_string() == "11");
  CHECK(combine_and({witness_of(Assignment::from_string("01")),
                     witness_of(Assignment::from_string("11"))})
            .to_string() == "01");

  // a ^ a ^ a = a
  const std::vector<WitnessPair> thrice{ws[0], ws[0], ws[0]};
  CHECK(combine_xor(thrice).to_string() == "10");

  // XOR of the one-hot block indicators is all ones for odd m.
  const OneHotFormula onehot = gen_onehot_formula(BlockSpec{1, 3, BlockMode::Pairwise});
  std::vector<WitnessPair> alphas;
  for (std::size_t j = 1; j < onehot.satisfying.size(); ++j) {
    alphas.push_back(witness_of(onehot.satisfying[j]));
  }
  CHECK(combine_xor(alphas).to_string() == "111");
  CHECK(combine_or(alphas).to_string() == "111");

  CHECK_THROWS_AS(combine_xor({ws[0], ws[1]}), UsageError);
  CHECK_THROWS_AS(combine_or({}), UsageError);
}

TEST_CASE("proof bit rules for matrix classes") {
  const int m = 3;
  // Rule 1: D^1 <= D^1.
  CHECK(proof_bit_for_class(block_indicator_matrix(0, m)) == true);
  // Rule 2: the zero matrix sits below 1 - D^j.
  CHECK(proof_bit_for_class(SymMatrix(m)) == false);
  // Rule 3: six of nine ones, no comparison applies.
  SymMatrix off_diagonal(m);
  for (int p = 0; p < m; ++p) {
    for (int q = 0; q < m; ++q) {
      if (p != q) off_diagonal.set(p, q, true);
    }
  }
  CHECK(proof_bit_for_class(off_diagonal) == true);
  // The all-ones matrix gets rule 1, its complement (zero) rule 2.
  CHECK(proof_bit_for_class(SymMatrix(m).complement()) == true);
}

TEST_CASE("pair indexing is row-major over unordered pairs") {
  const int m = 3;
  CHECK(pair_count(m) == 6);
  int expected = 0;
  for (int j = 0; j < m; ++j) {
    for (int k = j; k < m; ++k) {
      CHECK(pair_index(j, k, m) == expected);
      ++expected;
    }
  }
}

TEST_CASE("linear demo runs the whole attack") {
  AttackDemo demo = make_linear_demo(1, 3);
  const AttackResult clean = run_attack(AttackClass::Linear, demo.psi, demo.witnesses,
                                        demo.alphas);
  CHECK(clean.satisfied_fraction_pruned == Fraction(1));
  CHECK(clean.satisfied_fraction_original == Fraction(1));
  CHECK(clean.pruned_weight_fraction == Fraction(1));
  for (const Fraction& d : clean.distances) CHECK(d == Fraction(2, 3));
  for (const Fraction& e : clean.epsilon_per_witness) CHECK(e == Fraction(0));

  // Perturbed witnesses: the bound 1 - sum(eps) holds exactly.
  perturb_witness(demo, 1);
  const AttackResult perturbed = run_attack(AttackClass::Linear, demo.psi, demo.witnesses,
                                            demo.alphas);
  CHECK(perturbed.satisfied_fraction_pruned == Fraction(1));
  CHECK(perturbed.satisfied_fraction_original >= perturbed.bound);
  CHECK(perturbed.epsilon_per_witness[1] > Fraction(0));
}

TEST_CASE("monotone demos combine with OR and AND") {
  AttackDemo positive = make_monotone_demo(2, 3, true);
  const AttackResult or_result = run_attack(AttackClass::WeaklyPositive, positive.psi,
                                            positive.witnesses, positive.alphas);
  CHECK(or_result.satisfied_fraction_pruned == Fraction(1));
  for (const Fraction& d : or_result.distances) CHECK(d == Fraction(2, 3));

  AttackDemo negative = make_monotone_demo(2, 3, false);
  const AttackResult and_result = run_attack(AttackClass::WeaklyNegative, negative.psi,
                                             negative.witnesses, negative.alphas);
  CHECK(and_result.satisfied_fraction_pruned == Fraction(1));
  for (const Fraction& d : and_result.distances) CHECK(d == Fraction(2, 3));

  // The OR demo set is not weakly negative; the dispatch rejects it.
  CHECK_THROWS_AS(
      run_attack(AttackClass::WeaklyNegative, positive.psi, positive.witnesses, positive.alphas),
      UsageError);
}

TEST_CASE("two-cnf demo drives the matrix construction") {
  AttackDemo demo = make_two_cnf_demo(1, 3);
  CHECK(demo.witnesses.size() == 6);
  const AttackResult clean = run_attack(AttackClass::TwoCnf, demo.psi, demo.witnesses,
                                        demo.alphas);
  CHECK(clean.satisfied_fraction_pruned == Fraction(1));
  CHECK(clean.satisfied_fraction_original == Fraction(1));
  // beta is 1 - 2/m far from every two-block indicator.
  for (const Fraction& d : clean.distances) CHECK(d == Fraction(1, 3));

  // Perturb one pair witness; the triplewise bound uses the max epsilon.
  perturb_witness(demo, 1);
  const AttackResult perturbed = run_attack(AttackClass::TwoCnf, demo.psi, demo.witnesses,
                                            demo.alphas);
  CHECK(perturbed.satisfied_fraction_pruned == Fraction(1));
  Fraction max_eps(0);
  for (const Fraction& e : perturbed.epsilon_per_witness) max_eps = std::max(max_eps, e);
  CHECK(perturbed.bound == Fraction(1) - Fraction(6) * max_eps);
  CHECK(perturbed.satisfied_fraction_original >= perturbed.bound);
}

TEST_CASE("run_attack validates witness counts and class flags") {
  AttackDemo demo = make_linear_demo(1, 3);
  std::vector<WitnessPair> even(demo.witnesses.begin(), demo.witnesses.begin() + 2);
  CHECK_THROWS_AS(run_attack(AttackClass::Linear, demo.psi, even, {}), UsageError);

  // 0-valid / 1-valid sets are not attack classes; the flag check rejects a
  // formula whose set lacks the requested flag.
  Formula one_valid;
  one_valid.num_vars = 2;
  one_valid.set = make_constraint_set({or2()});
  one_valid.applications.push_back({{"OR2", {1, 2}}, 1});
  const ClassificationReport report = classify_set(one_valid.set);
  CHECK(report.set_flags.one_valid);
  CHECK_FALSE(report.set_flags.linear);
  CHECK_THROWS_AS(run_attack(AttackClass::Linear, one_valid,
                             {witness_of(Assignment::from_string("01"))}, {}),
                  UsageError);
}

TEST_CASE("construct_2cnf_proof rejects malformed inputs") {
  AttackDemo demo = make_two_cnf_demo(1, 3);
  const PruneResult pruned = prune(demo.psi, demo.witnesses);
  CHECK_THROWS_AS(construct_2cnf_proof(pruned.formula, demo.witnesses, 4), InvariantViolation);
  std::vector<WitnessPair> short_list(demo.witnesses.begin(), demo.witnesses.end() - 1);
  CHECK_THROWS_AS(construct_2cnf_proof(pruned.formula, short_list, 3), InvariantViolation);
}

TEST_CASE("combination lemmas hold for every flagged arity-2 relation") {
  // Exhaustive arity-3 sweep lives in the acceptance suite.
  for (std::uint32_t t = 0; t < 16; ++t) {
    const Constraint c = table_constraint(2, t);
    const ConstraintFlags flags = classify_constraint(c);
    const auto sats = c.satisfying_codes();
    if (flags.linear) {
      for (auto a : sats)
        for (auto b : sats)
          for (auto d : sats) CHECK(c.table[a ^ b ^ d]);
    }
    if (flags.weakly_positive) {
      for (auto a : sats)
        for (auto b : sats) CHECK(c.table[a | b]);
    }
    if (flags.weakly_negative) {
      for (auto a : sats)
        for (auto b : sats) CHECK(c.table[a & b]);
    }
    if (flags.two_cnf) {
      for (auto a : sats)
        for (auto b : sats)
          for (auto d : sats) CHECK(c.table[(a & b) | (a & d) | (b & d)]);
    }
  }
}

TEST_CASE("double_formula pins the second half") {
  Formula phi;
  phi.num_vars = 1;
  phi.set = make_constraint_set({id_constraint()});
  phi.applications.push_back({{"ID", {1}}, 1});

  const Formula doubled = double_formula(phi, ForceHalf::TrueHalf);
  CHECK(doubled.num_vars == 2);
  CHECK(doubled.applications.size() == 2);
  // Satisfying set = sats(phi) x {all-ones}.
  for (std::uint64_t code = 0; code < 4; ++code) {
    const Assignment a = Assignment::from_code(code, 2);
    const bool expect = a[0] && a[1];
    CHECK((evaluate(doubled, a) == Fraction(1)) == expect);
  }

  const Formula negated = double_formula(phi, ForceHalf::FalseHalf);
  for (std::uint64_t code = 0; code < 4; ++code) {
    const Assignment a = Assignment::from_code(code, 2);
    const bool expect = a[0] && !a[1];
    CHECK((evaluate(negated, a) == Fraction(1)) == expect);
  }
}
