#include "schaefer/constraint.hpp"

#include <algorithm>
#include <utility>

#include "schaefer/errors.hpp"

namespace schaefer {

std::vector<std::uint32_t> Constraint::satisfying_codes() const {
  std::vector<std::uint32_t> codes;
  for (std::uint32_t p = 0; p < table.size(); ++p) {
    if (table[p]) codes.push_back(p);
  }
  return codes;
}

std::string Constraint::table_string() const {
  std::string s(table.size(), '0');
  for (std::size_t p = 0; p < table.size(); ++p) {
    if (table[p]) s[p] = '1';
  }
  return s;
}

namespace {

void check_reserved_name(const Constraint& c) {
  if (c.name == "ID" && c.table_string() != "01") {
    throw UsageError("constraint name ID is reserved for the identity table 01");
  }
  if (c.name == "NOT" && c.table_string() != "10") {
    throw UsageError("constraint name NOT is reserved for the negation table 10");
  }
}

}  // namespace

Constraint make_constraint(std::string name, int arity, std::string_view table_bits,
                           int max_arity) {
  if (name.empty()) throw UsageError("constraint name must be non-empty");
  if (arity < 1) throw UsageError("constraint arity must be at least 1");
  if (arity > max_arity) {
    throw CapacityError("constraint arity " + std::to_string(arity) + " exceeds limit " +
                        std::to_string(max_arity));
  }
  const std::size_t expected = std::size_t{1} << arity;
  if (table_bits.size() != expected) {
    throw UsageError("constraint " + name + ": table must have length 2^arity = " +
                     std::to_string(expected));
  }
  Constraint c;
  c.name = std::move(name);
  c.arity = arity;
  c.table.resize(expected);
  for (std::size_t p = 0; p < expected; ++p) {
    if (table_bits[p] == '1') {
      c.table[p] = true;
    } else if (table_bits[p] != '0') {
      throw UsageError("constraint " + c.name + ": table must be a 0/1 string");
    }
  }
  check_reserved_name(c);
  return c;
}

Constraint id_constraint() { return make_constraint("ID", 1, "01"); }

Constraint not_constraint() { return make_constraint("NOT", 1, "10"); }

const Constraint* ConstraintSet::find(const std::string& name) const {
  auto it = std::find_if(constraints.begin(), constraints.end(),
                         [&](const Constraint& c) { return c.name == name; });
  return it == constraints.end() ? nullptr : &*it;
}

const Constraint& ConstraintSet::at(const std::string& name) const {
  const Constraint* c = find(name);
  if (!c) throw UsageError("unknown constraint: " + name);
  return *c;
}

bool ConstraintSet::contains(const std::string& name) const { return find(name) != nullptr; }

ConstraintSet make_constraint_set(std::vector<Constraint> constraints) {
  if (constraints.empty()) throw UsageError("a constraint set must be non-empty");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    check_reserved_name(constraints[i]);
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      if (constraints[i].name == constraints[j].name) {
        throw UsageError("duplicate constraint name: " + constraints[i].name);
      }
    }
  }
  return ConstraintSet{std::move(constraints)};
}

}  // namespace schaefer
