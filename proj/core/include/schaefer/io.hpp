#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schaefer/adversary.hpp"
#include "schaefer/formula.hpp"
#include "schaefer/gadget.hpp"

namespace schaefer {

// Constraint-set text format (.cset):
//   constraint <name> <arity> <table>
// where <table> is a 0/1 string of length 2^arity, position p = encoded
// index p. '#' starts a comment.
//
// Formula text format (.cfr):
//   vars <n>
//   app <weight> <name> <i1> ... <ik>
// Formula files may also carry their constraint definitions as embedded
// `constraint` lines, so a single .cfr is self-contained.
//
// Assignment/witness files: one 0/1 string per line; an optional header
//   split <n> <p>
// marks the assignment/proof boundary.
//
// Gadget files (.gadget) mirror .cfr with a target header:
//   target <name> <arity> <table>
//   vars <r+a>
//   app <weight> <name> <i1> ... <ik>

ConstraintSet parse_constraint_set(std::istream& in, int max_arity = kDefaultMaxArity);
ConstraintSet load_constraint_set(const std::string& path, int max_arity = kDefaultMaxArity);
void write_constraint_set(std::ostream& out, const ConstraintSet& s);

// extra, when given, supplies constraint definitions in addition to any
// embedded in the stream; duplicate names must agree exactly.
Formula parse_formula(std::istream& in, const ConstraintSet* extra = nullptr,
                      int max_arity = kDefaultMaxArity);
Formula load_formula(const std::string& path, const ConstraintSet* extra = nullptr,
                     int max_arity = kDefaultMaxArity);
void write_formula(std::ostream& out, const Formula& phi);

struct WitnessFile {
  int base_length = 0;
  int proof_length = 0;  // 0 when no split header is present
  std::vector<WitnessPair> witnesses;
};

WitnessFile parse_witness_file(std::istream& in);
WitnessFile load_witness_file(const std::string& path);
void write_witness_file(std::ostream& out, const WitnessFile& wf);

std::vector<Assignment> parse_assignment_file(std::istream& in);
std::vector<Assignment> load_assignment_file(const std::string& path);

Gadget parse_gadget(std::istream& in, int max_arity = kDefaultMaxArity);
Gadget load_gadget(const std::string& path, int max_arity = kDefaultMaxArity);
void write_gadget(std::ostream& out, const Gadget& g);

// FNV-1a 64-bit digest of a file's bytes, lowercase hex. Used in reports.
std::string file_digest(const std::string& path);

}  // namespace schaefer
