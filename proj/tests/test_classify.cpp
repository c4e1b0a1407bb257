#include <doctest.h>

#include "schaefer/classify.hpp"
#include "schaefer/errors.hpp"
#include "test_helpers.hpp"

using namespace schaefer;
using namespace schaefer::testing;

TEST_CASE("closure checks on the paper constraints") {
  CHECK(closed_under(xor2(), Polymorphism::Xor3));
  CHECK(closed_under(xor2(), Polymorphism::Maj3));
  CHECK_FALSE(closed_under(xor2(), Polymorphism::And2));
  CHECK_FALSE(closed_under(xor2(), Polymorphism::Or2));

  // maj(100, 010, 001) = 000 is rejected by exactly-one-of-three.
  CHECK_FALSE(closed_under(one_in_three(), Polymorphism::Maj3));
  CHECK_FALSE(closed_under(one_in_three(), Polymorphism::Xor3));

  // The empty relation is vacuously closed under everything.
  const Constraint empty = table_constraint(2, 0);
  for (auto op : {Polymorphism::And2, Polymorphism::Or2, Polymorphism::Xor3, Polymorphism::Maj3}) {
    CHECK(closed_under(empty, op));
  }
}

TEST_CASE("clause synthesis on the paper constraints") {
  const auto dual_horn = synthesize_clauses(or2(), ClauseFamily::DualHorn);
  REQUIRE(dual_horn.has_value());
  REQUIRE(dual_horn->clauses.size() == 1);
  CHECK(to_string(dual_horn->clauses[0]) == "x1 | x2");

  const auto linear = synthesize_clauses(xor2(), ClauseFamily::LinearEquation);
  REQUIRE(linear.has_value());
  REQUIRE(linear->equations.size() == 1);
  CHECK(linear->equations[0].vars == std::vector<int>{1, 2});
  CHECK(linear->equations[0].parity == true);

  // Implied 2-clauses of exactly-one-of-three admit 000, so synthesis fails.
  CHECK_FALSE(synthesize_clauses(one_in_three(), ClauseFamily::TwoClause).has_value());
}

TEST_CASE("classify_constraint matches the derived flag sets") {
  const ConstraintFlags xor_flags = classify_constraint(xor2());
  CHECK(xor_flags == ConstraintFlags{false, false, false, false, true, true, true});

  const ConstraintFlags or3_flags = classify_constraint(or3());
  CHECK(or3_flags == ConstraintFlags{false, true, true, false, false, false, false});

  const ConstraintFlags oit_flags = classify_constraint(one_in_three());
  CHECK(oit_flags == ConstraintFlags{});

  const ConstraintFlags id_flags = classify_constraint(id_constraint());
  CHECK(id_flags == ConstraintFlags{false, true, true, true, true, true, false});

  const ConstraintFlags not_flags = classify_constraint(not_constraint());
  CHECK(not_flags == ConstraintFlags{true, false, true, true, true, true, false});
}

TEST_CASE("classify_set reports the Schaefer verdict") {
  const ConstraintSet two_lin = make_constraint_set(
      {make_constraint("f1", 2, "0110"), make_constraint("f2", 2, "1001")});
  const ClassificationReport lin_report = classify_set(two_lin);
  CHECK_FALSE(lin_report.np_hard);
  CHECK(lin_report.witnessing_classes == std::vector<std::string>{"linear", "2cnf"});
  CHECK(lin_report.set_flags.c_closed);

  const ClassificationReport oit_report = classify_set(make_constraint_set({one_in_three()}));
  CHECK(oit_report.np_hard);
  CHECK(oit_report.verdict == "NP-hard (Schaefer)");

  const ClassificationReport id_report = classify_set(make_constraint_set({id_constraint()}));
  CHECK(id_report.witnessing_classes ==
        std::vector<std::string>{"1-valid", "weakly-positive", "weakly-negative", "linear",
                                 "2cnf"});
}

TEST_CASE("set flags are the conjunction of member flags") {
  const auto constraints = all_small_constraints();
  std::uniform_int_distribution<std::size_t> pick(0, constraints.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Constraint> members;
    for (int i = 0; i < 3; ++i) {
      Constraint c = constraints[pick(rng())];
      c.name += "_" + std::to_string(i);
      members.push_back(std::move(c));
    }
    const ConstraintSet s = make_constraint_set(members);
    const ClassificationReport report = classify_set(s);
    ConstraintFlags expect{true, true, true, true, true, true, true};
    for (const Constraint& c : s.constraints) {
      const ConstraintFlags f = classify_constraint(c);
      expect.zero_valid &= f.zero_valid;
      expect.one_valid &= f.one_valid;
      expect.weakly_positive &= f.weakly_positive;
      expect.weakly_negative &= f.weakly_negative;
      expect.linear &= f.linear;
      expect.two_cnf &= f.two_cnf;
      expect.c_closed &= f.c_closed;
    }
    CHECK(report.set_flags == expect);
  }
}

TEST_CASE("de_c_close breaks C-closure and keeps the tractable flags") {
  const ConstraintSet xs = make_constraint_set({xor2()});
  const ConstraintSet with_id = de_c_close(xs, DeCCloseMode::Id);
  CHECK(with_id.constraints.size() == 2);
  const ClassificationReport report = classify_set(with_id);
  CHECK_FALSE(report.set_flags.c_closed);
  CHECK(report.set_flags.linear);
  CHECK(report.set_flags.two_cnf);

  // Idempotent on sets already holding the constant.
  const ConstraintSet twice = de_c_close(with_id, DeCCloseMode::Id);
  CHECK(twice.constraints.size() == 2);

  const ConstraintSet eqs = make_constraint_set({eq2()});
  const ConstraintSet with_not = de_c_close(eqs, DeCCloseMode::Not);
  const ClassificationReport not_report = classify_set(with_not);
  CHECK(not_report.set_flags.zero_valid);  // NOT(0) = 1 preserves 0-validity
  CHECK_FALSE(not_report.set_flags.c_closed);

  // Every output is non-C-closed, for every arity <= 2 input constraint.
  for (int arity = 1; arity <= 2; ++arity) {
    const std::uint32_t tables = 1u << (1u << arity);
    for (std::uint32_t t = 0; t < tables; ++t) {
      const ConstraintSet s = make_constraint_set({table_constraint(arity, t)});
      CHECK_FALSE(classify_set(de_c_close(s, DeCCloseMode::Id)).set_flags.c_closed);
      CHECK_FALSE(classify_set(de_c_close(s, DeCCloseMode::Not)).set_flags.c_closed);
    }
  }
}

TEST_CASE("input complement swaps 0/1-valid and weakly positive/negative") {
  for (const Constraint& c : all_small_constraints()) {
    const std::uint32_t full = (1u << c.arity) - 1;
    std::string flipped(c.table.size(), '0');
    for (std::uint32_t p = 0; p <= full; ++p) {
      if (c.table[full ^ p]) flipped[p] = '1';
    }
    const Constraint mirrored = make_constraint("m", c.arity, flipped);
    const ConstraintFlags f = classify_constraint(c);
    const ConstraintFlags g = classify_constraint(mirrored);
    CHECK(f.zero_valid == g.one_valid);
    CHECK(f.one_valid == g.zero_valid);
    CHECK(f.weakly_positive == g.weakly_negative);
    CHECK(f.weakly_negative == g.weakly_positive);
    CHECK(f.linear == g.linear);
    CHECK(f.two_cnf == g.two_cnf);
    CHECK(f.c_closed == g.c_closed);
  }
}

TEST_CASE("cross-validation spot check: synthesis success equals closure") {
  // The full 276-relation sweep runs in the acceptance suite; spot-check the
  // arity-2 slice here.
  const std::pair<ClauseFamily, Polymorphism> pairs[] = {
      {ClauseFamily::Horn, Polymorphism::And2},
      {ClauseFamily::DualHorn, Polymorphism::Or2},
      {ClauseFamily::LinearEquation, Polymorphism::Xor3},
      {ClauseFamily::TwoClause, Polymorphism::Maj3},
  };
  for (std::uint32_t t = 0; t < 16; ++t) {
    const Constraint c = table_constraint(2, t);
    for (const auto& [family, op] : pairs) {
      CHECK(synthesize_clauses(c, family).has_value() == closed_under(c, op));
    }
  }
}
