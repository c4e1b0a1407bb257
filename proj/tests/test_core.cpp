#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "schaefer/errors.hpp"
#include "schaefer/io.hpp"
#include "schaefer/oracle.hpp"
#include "test_helpers.hpp"

using namespace schaefer;
using namespace schaefer::testing;

namespace {

Formula unit_vs_negated_unit() {
  Formula phi;
  phi.num_vars = 1;
  phi.set = make_constraint_set({id_constraint(), not_constraint()});
  phi.applications.push_back({{"ID", {1}}, 1});
  phi.applications.push_back({{"NOT", {1}}, 1});
  return phi;
}

}  // namespace

TEST_CASE("apply_constraint reads the truth table at the encoded position") {
  CHECK(apply_constraint(xor2(), {true, false}) == true);
  CHECK(apply_constraint(one_in_three(), {true, true, true}) == false);
  // The all-zero tuple always lands on table position 0.
  for (const Constraint& c : {xor2(), or3(), one_in_three(), and2()}) {
    CHECK(apply_constraint(c, std::vector<bool>(c.arity, false)) == c.table[0]);
  }
  CHECK_THROWS_AS(apply_constraint(xor2(), {true}), UsageError);
}

TEST_CASE("evaluate returns exact satisfied weight fractions") {
  const Formula phi = unit_vs_negated_unit();
  CHECK(evaluate(phi, Assignment::from_string("1")) == Fraction(1, 2));
  CHECK(evaluate(phi, Assignment::from_string("0")) == Fraction(1, 2));

  Formula two_lin;
  two_lin.num_vars = 2;
  two_lin.set = make_constraint_set({make_constraint("f1", 2, "0110"),
                                     make_constraint("f2", 2, "1001")});
  two_lin.applications.push_back({{"f1", {1, 2}}, 1});
  two_lin.applications.push_back({{"f2", {1, 2}}, 1});
  CHECK(evaluate(two_lin, Assignment::from_string("10")) == Fraction(1, 2));

  Formula sat;
  sat.num_vars = 2;
  sat.set = make_constraint_set({or2()});
  sat.applications.push_back({{"OR2", {1, 2}}, 3});
  sat.applications.push_back({{"OR2", {2, 1}}, 2});
  CHECK(evaluate(sat, Assignment::from_string("11")) == Fraction(1));

  CHECK_THROWS_AS(evaluate(phi, Assignment::from_string("11")), UsageError);
}

TEST_CASE("evaluate is invariant under splitting a weight") {
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Formula phi;
    phi.num_vars = 4;
    phi.set = make_constraint_set({or2(), xor2()});
    std::uniform_int_distribution<int> var(1, 4);
    std::uniform_int_distribution<std::int64_t> weight(2, 20);
    for (int i = 0; i < 5; ++i) {
      phi.applications.push_back(
          {{coin(rng()) ? "OR2" : "XOR2", {var(rng()), var(rng())}}, weight(rng())});
    }
    Formula split = phi;
    const std::int64_t w = split.applications[0].weight;
    split.applications[0].weight = w / 2;
    split.applications.push_back({split.applications[0].app, w - w / 2});

    std::uniform_int_distribution<std::uint64_t> code(0, 15);
    const Assignment a = Assignment::from_code(code(rng()), 4);
    CHECK(evaluate(phi, a) == evaluate(split, a));
  }
}

TEST_CASE("truth table permutation commutes with tuple permutation") {
  std::uniform_int_distribution<std::uint32_t> table(0, 255);
  for (int trial = 0; trial < 50; ++trial) {
    const Constraint c = table_constraint(3, table(rng()));
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng());
    // permuted(x_1,x_2,x_3) = c(x_perm(1), x_perm(2), x_perm(3))
    std::string permuted_bits(8, '0');
    for (std::uint32_t p = 0; p < 8; ++p) {
      std::uint32_t q = 0;
      for (int j = 0; j < 3; ++j) {
        if ((p >> perm[j]) & 1u) q |= 1u << j;
      }
      if (c.table[q]) permuted_bits[p] = '1';
    }
    const Constraint permuted = make_constraint("perm", 3, permuted_bits);
    for (std::uint32_t p = 0; p < 8; ++p) {
      std::vector<bool> tuple{(p & 1) != 0, (p & 2) != 0, (p & 4) != 0};
      std::vector<bool> projected{tuple[perm[0]], tuple[perm[1]], tuple[perm[2]]};
      CHECK(apply_constraint(permuted, tuple) == apply_constraint(c, projected));
    }
  }
}

TEST_CASE("constraint construction validates shape and limits") {
  CHECK_THROWS_AS(make_constraint("BAD", 2, "011"), UsageError);
  CHECK_THROWS_AS(make_constraint("BAD", 0, ""), UsageError);
  CHECK_THROWS_AS(make_constraint("BAD", 2, "01x0"), UsageError);
  CHECK_THROWS_AS(make_constraint("BIG", 11, std::string(2048, '0')), CapacityError);
  CHECK_THROWS_AS(make_constraint("ID", 1, "11"), UsageError);
  CHECK_THROWS_AS(make_constraint("NOT", 1, "01"), UsageError);
  CHECK_THROWS_AS(make_constraint_set({}), UsageError);
  CHECK_THROWS_AS(make_constraint_set({or2(), or2()}), UsageError);
}

TEST_CASE("assignment bit strings round-trip") {
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::uint64_t> code(0, (1u << 16) - 1);
    const std::uint64_t c = code(rng());
    const Assignment a = Assignment::from_code(c, 16);
    CHECK(a.to_code() == c);
    CHECK(Assignment::from_string(a.to_string()) == a);
  }
  CHECK_THROWS_AS(Assignment::from_string("01012"), UsageError);
}

TEST_CASE("constraint set files parse and write") {
  const std::string text =
      "# paper examples\n"
      "constraint f1 2 0110\n"
      "constraint f2 2 1001\n"
      "\n"
      "constraint ONE_IN_THREE 3 01101000  # exactly one of three\n";
  std::istringstream in(text);
  const ConstraintSet s = parse_constraint_set(in);
  CHECK(s.constraints.size() == 3);
  CHECK(s.at("ONE_IN_THREE").arity == 3);
  CHECK(s.at("f1").table_string() == "0110");

  std::ostringstream out;
  write_constraint_set(out, s);
  std::istringstream again(out.str());
  const ConstraintSet reparsed = parse_constraint_set(again);
  CHECK(reparsed.constraints.size() == 3);
  CHECK(reparsed.at("f2").table_string() == s.at("f2").table_string());
}

TEST_CASE("formula files parse, validate, and write") {
  const std::string text =
      "constraint OR2 2 0111\n"
      "vars 3\n"
      "app 2 OR2 1 2\n"
      "app 1 OR2 3 3\n";
  std::istringstream in(text);
  const Formula phi = parse_formula(in);
  CHECK(phi.num_vars == 3);
  CHECK(phi.total_weight() == 3);

  std::ostringstream out;
  write_formula(out, phi);
  std::istringstream again(out.str());
  const Formula reparsed = parse_formula(again);
  CHECK(reparsed.num_vars == phi.num_vars);
  CHECK(reparsed.applications.size() == phi.applications.size());
  CHECK(evaluate(reparsed, Assignment::from_string("110")) ==
        evaluate(phi, Assignment::from_string("110")));

  std::istringstream bad_index("constraint OR2 2 0111\nvars 2\napp 1 OR2 1 3\n");
  CHECK_THROWS_AS(parse_formula(bad_index), UsageError);
  std::istringstream bad_weight("constraint OR2 2 0111\nvars 2\napp 0 OR2 1 2\n");
  CHECK_THROWS_AS(parse_formula(bad_weight), UsageError);
  std::istringstream bad_name("constraint OR2 2 0111\nvars 2\napp 1 XOR 1 2\n");
  CHECK_THROWS_AS(parse_formula(bad_name), UsageError);
}

TEST_CASE("witness files honor the split header") {
  std::istringstream in("split 2 3\n10111\n01000\n");
  const WitnessFile wf = parse_witness_file(in);
  CHECK(wf.base_length == 2);
  CHECK(wf.proof_length == 3);
  CHECK(wf.witnesses.size() == 2);
  CHECK(wf.witnesses[0].base.to_string() == "10");
  CHECK(wf.witnesses[0].proof.to_string() == "111");

  std::istringstream no_split("101\n110\n");
  const WitnessFile plain = parse_witness_file(no_split);
  CHECK(plain.base_length == 3);
  CHECK(plain.proof_length == 0);

  std::istringstream mismatch("split 2 2\n101\n");
  CHECK_THROWS_AS(parse_witness_file(mismatch), UsageError);
}
