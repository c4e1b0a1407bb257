#include "schaefer/io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>

#include "schaefer/errors.hpp"

namespace schaefer {

namespace {

// Splits one line into whitespace tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line.substr(0, line.find('#')));
  std::string tok;
  while (iss >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int value = std::stoi(tok, &pos);
    if (pos != tok.size()) throw UsageError("bad " + what + ": " + tok);
    return value;
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": " + tok);
  }
}

std::int64_t parse_weight(const std::string& tok) {
  try {
    std::size_t pos = 0;
    const std::int64_t value = std::stoll(tok, &pos);
    if (pos != tok.size() || value <= 0) throw UsageError("bad weight: " + tok);
    return value;
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError("bad weight: " + tok);
  }
}

Constraint parse_constraint_line(const std::vector<std::string>& tokens, int max_arity) {
  if (tokens.size() != 4) {
    throw UsageError("constraint lines take: constraint <name> <arity> <table>");
  }
  return make_constraint(tokens[1], parse_int(tokens[2], "arity"), tokens[3], max_arity);
}

WeightedApplication parse_app_line(const std::vector<std::string>& tokens) {
  if (tokens.size() < 4) {
    throw UsageError("app lines take: app <weight> <name> <i1> ... <ik>");
  }
  WeightedApplication wa;
  wa.weight = parse_weight(tokens[1]);
  wa.app.constraint = tokens[2];
  for (std::size_t i = 3; i < tokens.size(); ++i) {
    wa.app.indices.push_back(parse_int(tokens[i], "variable index"));
  }
  return wa;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  return in;
}

}  // namespace

ConstraintSet parse_constraint_set(std::istream& in, int max_arity) {
  std::vector<Constraint> constraints;
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "constraint") {
      throw UsageError("unexpected line in constraint set file: " + tokens[0]);
    }
    constraints.push_back(parse_constraint_line(tokens, max_arity));
  }
  return make_constraint_set(std::move(constraints));
}

ConstraintSet load_constraint_set(const std::string& path, int max_arity) {
  auto in = open_file(path);
  return parse_constraint_set(in, max_arity);
}

void write_constraint_set(std::ostream& out, const ConstraintSet& s) {
  for (const Constraint& c : s.constraints) {
    out << "constraint " << c.name << " " << c.arity << " " << c.table_string() << "\n";
  }
}

Formula parse_formula(std::istream& in, const ConstraintSet* extra, int max_arity) {
  Formula phi;
  std::vector<Constraint> constraints;
  bool saw_vars = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "constraint") {
      constraints.push_back(parse_constraint_line(tokens, max_arity));
    } else if (tokens[0] == "vars") {
      if (saw_vars) throw UsageError("duplicate vars line");
      if (tokens.size() != 2) throw UsageError("vars lines take: vars <n>");
      phi.num_vars = parse_int(tokens[1], "variable count");
      saw_vars = true;
    } else if (tokens[0] == "app") {
      if (!saw_vars) throw UsageError("app line before vars line");
      phi.applications.push_back(parse_app_line(tokens));
    } else {
      throw UsageError("unexpected line in formula file: " + tokens[0]);
    }
  }
  if (!saw_vars) throw UsageError("formula file has no vars line");
  if (extra) {
    for (const Constraint& c : extra->constraints) {
      bool duplicate = false;
      for (const Constraint& own : constraints) {
        if (own.name == c.name) {
          if (own.table != c.table) {
            throw UsageError("constraint " + c.name + " defined with conflicting tables");
          }
          duplicate = true;
        }
      }
      if (!duplicate) constraints.push_back(c);
    }
  }
  phi.set = make_constraint_set(std::move(constraints));
  validate_formula(phi);
  return phi;
}

Formula load_formula(const std::string& path, const ConstraintSet* extra, int max_arity) {
  auto in = open_file(path);
  return parse_formula(in, extra, max_arity);
}

void write_formula(std::ostream& out, const Formula& phi) {
  write_constraint_set(out, phi.set);
  out << "vars " << phi.num_vars << "\n";
  for (const auto& wa : phi.applications) {
    out << "app " << wa.weight << " " << wa.app.constraint;
    for (int i : wa.app.indices) out << " " << i;
    out << "\n";
  }
}

WitnessFile parse_witness_file(std::istream& in) {
  WitnessFile wf;
  bool saw_split = false;
  bool saw_line = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "split") {
      if (saw_line) throw UsageError("split header must precede assignments");
      if (saw_split) throw UsageError("duplicate split header");
      if (tokens.size() != 3) throw UsageError("split lines take: split <n> <p>");
      wf.base_length = parse_int(tokens[1], "assignment length");
      wf.proof_length = parse_int(tokens[2], "proof length");
      if (wf.base_length < 0 || wf.proof_length < 0) {
        throw UsageError("split lengths must be non-negative");
      }
      saw_split = true;
      continue;
    }
    if (tokens.size() != 1) throw UsageError("witness lines hold a single 0/1 string");
    const Assignment full = Assignment::from_string(tokens[0]);
    if (!saw_split && !saw_line) {
      wf.base_length = full.size();
      wf.proof_length = 0;
    }
    if (full.size() != wf.base_length + wf.proof_length) {
      throw UsageError("witness length " + std::to_string(full.size()) +
                       " does not match split " + std::to_string(wf.base_length) + "+" +
                       std::to_string(wf.proof_length));
    }
    WitnessPair w;
    w.base.bits.assign(full.bits.begin(), full.bits.begin() + wf.base_length);
    w.proof.bits.assign(full.bits.begin() + wf.base_length, full.bits.end());
    wf.witnesses.push_back(std::move(w));
    saw_line = true;
  }
  if (wf.witnesses.empty()) throw UsageError("witness file holds no assignments");
  return wf;
}

WitnessFile load_witness_file(const std::string& path) {
  auto in = open_file(path);
  return parse_witness_file(in);
}

void write_witness_file(std::ostream& out, const WitnessFile& wf) {
  out << "split " << wf.base_length << " " << wf.proof_length << "\n";
  for (const WitnessPair& w : wf.witnesses) out << w.full().to_string() << "\n";
}

std::vector<Assignment> parse_assignment_file(std::istream& in) {
  std::vector<Assignment> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 1) throw UsageError("assignment lines hold a single 0/1 string");
    out.push_back(Assignment::from_string(tokens[0]));
  }
  if (out.empty()) throw UsageError("assignment file holds no assignments");
  return out;
}

std::vector<Assignment> load_assignment_file(const std::string& path) {
  auto in = open_file(path);
  return parse_assignment_file(in);
}

Gadget parse_gadget(std::istream& in, int max_arity) {
  Gadget g;
  bool saw_target = false;
  bool saw_vars = false;
  int total = 0;
  std::string line;
  while (std::getline(in, line)) {
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "target") {
      if (saw_target) throw UsageError("duplicate target line");
      if (tokens.size() != 4) {
        throw UsageError("target lines take: target <name> <arity> <table>");
      }
      g.target = make_constraint(tokens[1], parse_int(tokens[2], "arity"), tokens[3], max_arity);
      saw_target = true;
    } else if (tokens[0] == "vars") {
      if (!saw_target) throw UsageError("vars line before target line");
      if (tokens.size() != 2) throw UsageError("vars lines take: vars <n>");
      total = parse_int(tokens[1], "variable count");
      if (total < g.target.arity) {
        throw UsageError("gadget variable count below the target arity");
      }
      g.aux_count = total - g.target.arity;
      saw_vars = true;
    } else if (tokens[0] == "app") {
      if (!saw_vars) throw UsageError("app line before vars line");
      g.applications.push_back(parse_app_line(tokens).app);
    } else {
      throw UsageError("unexpected line in gadget file: " + tokens[0]);
    }
  }
  if (!saw_target || !saw_vars) throw UsageError("gadget file needs target and vars lines");
  return g;
}

Gadget load_gadget(const std::string& path, int max_arity) {
  auto in = open_file(path);
  return parse_gadget(in, max_arity);
}

void write_gadget(std::ostream& out, const Gadget& g) {
  out << "target " << g.target.name << " " << g.target.arity << " " << g.target.table_string()
      << "\n";
  out << "vars " << g.target.arity + g.aux_count << "\n";
  for (const ConstraintApplication& app : g.applications) {
    out << "app 1 " << app.constraint;
    for (int i : app.indices) out << " " << i;
    out << "\n";
  }
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::uint64_t hash = 1469598103934665603ull;  // FNV offset basis
  char ch;
  while (in.get(ch)) {
    hash ^= static_cast<unsigned char>(ch);
    hash *= 1099511628211ull;  // FNV prime
  }
  std::ostringstream oss;
  oss << std::hex;
  oss.width(16);
  oss.fill('0');
  oss << hash;
  return oss.str();
}

}  // namespace schaefer
