#include "schaefer/formula.hpp"

#include <numeric>

#include "schaefer/errors.hpp"

namespace schaefer {

Assignment Assignment::from_string(std::string_view s) {
  Assignment a;
  a.bits.reserve(s.size());
  for (char ch : s) {
    if (ch == '0') {
      a.bits.push_back(false);
    } else if (ch == '1') {
      a.bits.push_back(true);
    } else {
      throw UsageError("assignment must be a 0/1 string");
    }
  }
  return a;
}

Assignment Assignment::from_code(std::uint64_t code, int length) {
  Assignment a;
  a.bits.resize(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) a.bits[static_cast<std::size_t>(j)] = (code >> j) & 1u;
  return a;
}

std::uint64_t Assignment::to_code() const {
  if (size() > 63) throw CapacityError("assignment too long for integer encoding");
  std::uint64_t code = 0;
  for (int j = 0; j < size(); ++j) {
    if (bits[static_cast<std::size_t>(j)]) code |= std::uint64_t{1} << j;
  }
  return code;
}

std::string Assignment::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t j = 0; j < bits.size(); ++j) {
    if (bits[j]) s[j] = '1';
  }
  return s;
}

std::int64_t Formula::total_weight() const {
  std::int64_t w = 0;
  for (const auto& wa : applications) w += wa.weight;
  return w;
}

void validate_formula(const Formula& phi) {
  if (phi.num_vars < 1) throw UsageError("formula must have at least one variable");
  if (phi.set.constraints.empty()) throw UsageError("formula has an empty constraint set");
  for (const auto& wa : phi.applications) {
    if (wa.weight <= 0) throw UsageError("application weights must be positive");
    const Constraint& c = phi.set.at(wa.app.constraint);
    if (static_cast<int>(wa.app.indices.size()) != c.arity) {
      throw UsageError("application of " + c.name + " has " +
                       std::to_string(wa.app.indices.size()) + " indices, arity is " +
                       std::to_string(c.arity));
    }
    for (int i : wa.app.indices) {
      if (i < 1 || i > phi.num_vars) {
        throw UsageError("application index " + std::to_string(i) + " out of range [1, " +
                         std::to_string(phi.num_vars) + "]");
      }
    }
  }
}

bool apply_constraint(const Constraint& c, const std::vector<bool>& values) {
  if (static_cast<int>(values.size()) != c.arity) {
    throw UsageError("value tuple length " + std::to_string(values.size()) +
                     " does not match arity " + std::to_string(c.arity));
  }
  std::uint32_t p = 0;
  for (int j = 0; j < c.arity; ++j) {
    if (values[static_cast<std::size_t>(j)]) p |= 1u << j;
  }
  return c.table[p];
}

ResolvedFormula::ResolvedFormula(const Formula& phi) {
  validate_formula(phi);
  num_vars_ = phi.num_vars;
  items_.reserve(phi.applications.size());
  for (const auto& wa : phi.applications) {
    Item item;
    item.table = &phi.set.at(wa.app.constraint).table;
    item.idx0.reserve(wa.app.indices.size());
    for (int i : wa.app.indices) item.idx0.push_back(i - 1);
    item.weight = wa.weight;
    items_.push_back(std::move(item));
    total_weight_ += wa.weight;
  }
}

std::int64_t ResolvedFormula::satisfied_weight(const Assignment& a) const {
  std::int64_t sat = 0;
  for (const auto& item : items_) {
    std::uint32_t p = 0;
    for (std::size_t j = 0; j < item.idx0.size(); ++j) {
      if (a.bits[static_cast<std::size_t>(item.idx0[j])]) p |= 1u << j;
    }
    if ((*item.table)[p]) sat += item.weight;
  }
  return sat;
}

std::int64_t ResolvedFormula::satisfied_weight(std::uint64_t code) const {
  std::int64_t sat = 0;
  for (const auto& item : items_) {
    std::uint32_t p = 0;
    for (std::size_t j = 0; j < item.idx0.size(); ++j) {
      p |= static_cast<std::uint32_t>((code >> item.idx0[j]) & 1u) << j;
    }
    if ((*item.table)[p]) sat += item.weight;
  }
  return sat;
}

Fraction evaluate(const Formula& phi, const Assignment& a) {
  if (a.size() != phi.num_vars) {
    throw UsageError("assignment length " + std::to_string(a.size()) +
                     " does not match formula variable count " + std::to_string(phi.num_vars));
  }
  ResolvedFormula resolved(phi);
  if (resolved.total_weight() <= 0) {
    throw UsageError("formula has no applications to evaluate");
  }
  return Fraction(resolved.satisfied_weight(a), resolved.total_weight());
}

}  // namespace schaefer
