#include "schaefer/classify.hpp"

#include <algorithm>

#include "schaefer/errors.hpp"

namespace schaefer {

std::string to_string(Polymorphism op) {
  switch (op) {
    case Polymorphism::And2: return "and2";
    case Polymorphism::Or2: return "or2";
    case Polymorphism::Xor3: return "xor3";
    case Polymorphism::Maj3: return "maj3";
  }
  return "?";
}

std::string to_string(ClauseFamily family) {
  switch (family) {
    case ClauseFamily::Horn: return "horn";
    case ClauseFamily::DualHorn: return "dual-horn";
    case ClauseFamily::TwoClause: return "two-clause";
    case ClauseFamily::LinearEquation: return "linear-equation";
  }
  return "?";
}

std::optional<ClauseFamily> parse_clause_family(const std::string& text) {
  if (text == "horn") return ClauseFamily::Horn;
  if (text == "dual-horn") return ClauseFamily::DualHorn;
  if (text == "two-clause") return ClauseFamily::TwoClause;
  if (text == "linear-equation") return ClauseFamily::LinearEquation;
  return std::nullopt;
}

std::string to_string(const Clause& clause) {
  std::string s;
  for (std::size_t i = 0; i < clause.literals.size(); ++i) {
    if (i) s += " | ";
    if (clause.literals[i].negated) s += "~";
    s += "x" + std::to_string(clause.literals[i].var);
  }
  return s;
}

std::string to_string(const LinearEquation& eq) {
  std::string s;
  for (std::size_t i = 0; i < eq.vars.size(); ++i) {
    if (i) s += " ^ ";
    s += "x" + std::to_string(eq.vars[i]);
  }
  s += eq.parity ? " = 1" : " = 0";
  return s;
}

bool closed_under(const Constraint& c, Polymorphism op) {
  const auto sats = c.satisfying_codes();
  const auto member = [&](std::uint32_t code) { return c.table[code]; };
  switch (op) {
    case Polymorphism::And2:
      for (auto a : sats)
        for (auto b : sats)
          if (!member(a & b)) return false;
      return true;
    case Polymorphism::Or2:
      for (auto a : sats)
        for (auto b : sats)
          if (!member(a | b)) return false;
      return true;
    case Polymorphism::Xor3:
      for (auto a : sats)
        for (auto b : sats)
          for (auto d : sats)
            if (!member(a ^ b ^ d)) return false;
      return true;
    case Polymorphism::Maj3:
      for (auto a : sats)
        for (auto b : sats)
          for (auto d : sats)
            if (!member((a & b) | (a & d) | (b & d))) return false;
      return true;
  }
  return false;
}

namespace {

// Relation mask over 2^k assignment codes: bit p set iff the clause is
// satisfied at p.
std::vector<bool> clause_relation(const Clause& clause, int k) {
  std::vector<bool> rel(std::size_t{1} << k, false);
  for (std::uint32_t p = 0; p < rel.size(); ++p) {
    for (const Literal& lit : clause.literals) {
      const bool v = (p >> (lit.var - 1)) & 1u;
      if (v != lit.negated) {
        rel[p] = true;
        break;
      }
    }
  }
  return rel;
}

std::vector<bool> equation_relation(const LinearEquation& eq, int k) {
  std::vector<bool> rel(std::size_t{1} << k, false);
  for (std::uint32_t p = 0; p < rel.size(); ++p) {
    bool sum = false;
    for (int v : eq.vars) sum ^= ((p >> (v - 1)) & 1u) != 0;
    rel[p] = (sum == eq.parity);
  }
  return rel;
}

bool implied_by(const std::vector<std::uint32_t>& sats, const std::vector<bool>& rel) {
  return std::all_of(sats.begin(), sats.end(), [&](std::uint32_t p) { return rel[p]; });
}

Clause make_clause(std::uint32_t var_mask, std::uint32_t positive_mask, int k) {
  Clause clause;
  for (int v = 1; v <= k; ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    if (var_mask & bit) clause.literals.push_back({v, (positive_mask & bit) == 0});
  }
  return clause;
}

// Candidate clauses of the family over k variables, in the canonical order
// the representation is reported in. Tautologies never arise: every clause
// mentions each variable at most once.
std::vector<Clause> family_clauses(ClauseFamily family, int k) {
  std::vector<Clause> out;
  const std::uint32_t full = (k >= 32) ? ~0u : ((1u << k) - 1);
  switch (family) {
    case ClauseFamily::Horn:
      // At most one non-negated literal per clause.
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        out.push_back(make_clause(mask, 0, k));
        for (int v = 1; v <= k; ++v) {
          const std::uint32_t bit = 1u << (v - 1);
          if (mask & bit) out.push_back(make_clause(mask, bit, k));
        }
      }
      break;
    case ClauseFamily::DualHorn:
      // At most one negated literal per clause.
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        out.push_back(make_clause(mask, mask, k));
        for (int v = 1; v <= k; ++v) {
          const std::uint32_t bit = 1u << (v - 1);
          if (mask & bit) out.push_back(make_clause(mask, mask & ~bit, k));
        }
      }
      break;
    case ClauseFamily::TwoClause:
      for (int v = 1; v <= k; ++v) {
        out.push_back(Clause{{{v, false}}});
        out.push_back(Clause{{{v, true}}});
      }
      for (int u = 1; u <= k; ++u) {
        for (int v = u + 1; v <= k; ++v) {
          out.push_back(Clause{{{u, false}, {v, false}}});
          out.push_back(Clause{{{u, false}, {v, true}}});
          out.push_back(Clause{{{u, true}, {v, false}}});
          out.push_back(Clause{{{u, true}, {v, true}}});
        }
      }
      break;
    case ClauseFamily::LinearEquation:
      break;  // handled separately
  }
  return out;
}

std::vector<LinearEquation> family_equations(int k) {
  std::vector<LinearEquation> out;
  const std::uint32_t full = (1u << k) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    LinearEquation eq;
    for (int v = 1; v <= k; ++v) {
      if (mask & (1u << (v - 1))) eq.vars.push_back(v);
    }
    eq.parity = false;
    out.push_back(eq);
    eq.parity = true;
    out.push_back(eq);
  }
  return out;
}

}  // namespace

std::optional<ClauseRepresentation> synthesize_clauses(const Constraint& c, ClauseFamily family) {
  const int k = c.arity;
  const auto sats = c.satisfying_codes();
  std::vector<bool> conjunction(std::size_t{1} << k, true);

  ClauseRepresentation rep;
  rep.family = family;
  if (family == ClauseFamily::LinearEquation) {
    for (const LinearEquation& eq : family_equations(k)) {
      const auto rel = equation_relation(eq, k);
      if (!implied_by(sats, rel)) continue;
      rep.equations.push_back(eq);
      for (std::size_t p = 0; p < conjunction.size(); ++p)
        conjunction[p] = conjunction[p] && rel[p];
    }
  } else {
    for (const Clause& clause : family_clauses(family, k)) {
      const auto rel = clause_relation(clause, k);
      if (!implied_by(sats, rel)) continue;
      rep.clauses.push_back(clause);
      for (std::size_t p = 0; p < conjunction.size(); ++p)
        conjunction[p] = conjunction[p] && rel[p];
    }
  }

  // The conjunction always contains the relation; equality fails only when
  // some non-satisfying code slips through every implied clause.
  if (conjunction != c.table) return std::nullopt;
  return rep;
}

ConstraintFlags classify_constraint(const Constraint& c) {
  ConstraintFlags flags;
  const std::uint32_t full = (1u << c.arity) - 1;
  flags.zero_valid = c.table[0];
  flags.one_valid = c.table[full];
  flags.c_closed = true;
  for (std::uint32_t p = 0; p <= full; ++p) {
    if (c.table[p] != c.table[full ^ p]) {
      flags.c_closed = false;
      break;
    }
  }
  flags.weakly_negative = closed_under(c, Polymorphism::And2);
  flags.weakly_positive = closed_under(c, Polymorphism::Or2);
  flags.linear = closed_under(c, Polymorphism::Xor3);
  flags.two_cnf = closed_under(c, Polymorphism::Maj3);
  return flags;
}

ClassificationReport classify_set(const ConstraintSet& s) {
  if (s.constraints.empty()) throw UsageError("cannot classify an empty constraint set");
  ClassificationReport report;
  report.set_flags = ConstraintFlags{true, true, true, true, true, true, true};
  for (const Constraint& c : s.constraints) {
    const ConstraintFlags f = classify_constraint(c);
    report.per_constraint.emplace_back(c.name, f);
    report.set_flags.zero_valid &= f.zero_valid;
    report.set_flags.one_valid &= f.one_valid;
    report.set_flags.weakly_positive &= f.weakly_positive;
    report.set_flags.weakly_negative &= f.weakly_negative;
    report.set_flags.linear &= f.linear;
    report.set_flags.two_cnf &= f.two_cnf;
    report.set_flags.c_closed &= f.c_closed;
  }
  const ConstraintFlags& sf = report.set_flags;
  if (sf.zero_valid) report.witnessing_classes.push_back("0-valid");
  if (sf.one_valid) report.witnessing_classes.push_back("1-valid");
  if (sf.weakly_positive) report.witnessing_classes.push_back("weakly-positive");
  if (sf.weakly_negative) report.witnessing_classes.push_back("weakly-negative");
  if (sf.linear) report.witnessing_classes.push_back("linear");
  if (sf.two_cnf) report.witnessing_classes.push_back("2cnf");
  report.np_hard = report.witnessing_classes.empty();
  if (report.np_hard) {
    report.verdict = "NP-hard (Schaefer)";
  } else {
    std::string classes;
    for (std::size_t i = 0; i < report.witnessing_classes.size(); ++i) {
      if (i) classes += ", ";
      classes += report.witnessing_classes[i];
    }
    report.verdict = "polynomial (under P!=NP the CSP is tractable): " + classes;
  }
  return report;
}

ConstraintSet de_c_close(const ConstraintSet& s, DeCCloseMode which) {
  const Constraint added = which == DeCCloseMode::Id ? id_constraint() : not_constraint();
  if (s.contains(added.name)) return s;  // reserved names have fixed tables
  ConstraintSet out = s;
  out.constraints.push_back(added);
  return out;
}

}  // namespace schaefer
